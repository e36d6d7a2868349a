"""Polytopes attached to n-claw trees for the groups Z2, Z2xZ2, Z3.

Coordinates are the projected ones: blocks j = 1..n are contiguous, and
inside a block the nonzero group elements appear in index order (Z2: [x_1];
Z2xZ2: [x_a, x_b, x_c]; Z3: [x_1, x_2]).  The identity coordinate of each
block is implicit (1 minus the block sum).

Each polytope has one 0/1 vertex per zero-sum tuple over the group, and a
facet system made of nonnegativity, per-block upper bounds, and a family of
cut inequalities indexed by subsets of [n] (Z2, Z2xZ2) or by digit tuples in
{0,1,2}^n (Z3) in two dual channels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .geometry import HalfSpace, HPolytope, LatticeBasis, VPolytope
from .groups import Group, Z2, Z2xZ2, Z3, group_by_name, zero_sum_tuples

# The two fixed families of 2-vectors defining the Z3 cut functionals:
# channel 1 uses U, channel 2 uses W, indexed by the digit at each block.
Z3_NORMALS_U = ((1, 2), (1, -1), (-2, -1))
Z3_NORMALS_W = ((2, 1), (-1, 1), (-1, -2))

MIN_N = 2


def _check_n(n: int, minimum: int = MIN_N) -> None:
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")


def block_width(group: Group) -> int:
    return group.order - 1


def ambient_dim(group: Group, n: int) -> int:
    return block_width(group) * n


@dataclass(frozen=True)
class OddSubsetCut:
    """Index data (A, channel) of one cut functional S_{A,g}.

    For Z2 and Z2xZ2, ``subset`` is the sorted tuple of positions in [n]
    forming A; the channel is a nonzero group element (Z2 has only channel
    1; Z2xZ2 channels 1, 2, 3 stand for a, b, c).  For Z3, ``subset`` is the
    digit tuple A in {0,1,2}^n and the channel is 1 or 2 selecting the U or
    W normals.  ``is_facet`` tells whether the cut's plus-side inequality is
    one of the polytope's facets (odd |A|, or digit sum 2 mod 3); general
    cuts are still meaningful and are used by the cut-piece lemmas.
    """

    group: Group
    n: int
    subset: tuple[int, ...]
    channel: int

    def __post_init__(self):
        _check_n(self.n, 1)
        subset = tuple(int(v) for v in self.subset)
        object.__setattr__(self, "subset", subset)
        if self.group is Z3:
            if self.channel not in (1, 2):
                raise ValueError(f"Z3 channel must be 1 or 2, got {self.channel}")
            if len(subset) != self.n or any(a not in (0, 1, 2) for a in subset):
                raise ValueError("Z3 cut needs a digit tuple in {0,1,2}^n")
        else:
            if self.channel not in self.group.nonzero:
                raise ValueError(
                    f"channel {self.channel} is not a nonzero element of {self.group}")
            if subset != tuple(sorted(set(subset))):
                raise ValueError("subset positions must be sorted and distinct")
            if any(j < 1 or j > self.n for j in subset):
                raise ValueError("subset positions must lie in 1..n")

    @property
    def is_facet(self) -> bool:
        if self.group is Z3:
            return sum(self.subset) % 3 == 2
        return len(self.subset) % 2 == 1

    @property
    def rhs(self) -> int:
        """Right-hand side of the facet inequality S_{A,g} >= rhs."""
        if self.group is Z3:
            return 2 - sum(self.subset)
        return 1 - len(self.subset)

    def channel_name(self) -> str:
        if self.group is Z3:
            return str(self.channel)
        return self.group.element_name(self.channel)

    def describe(self) -> dict:
        """JSON-ready hypothesis fragment."""
        return {"A": list(self.subset), "channel": self.channel_name()}


def subset_cut(group: Group, n: int, positions: Iterable[int],
               channel: int = 1) -> OddSubsetCut:
    """Cut for a position set A, for the groups indexed by subsets of [n]."""
    if group is Z3:
        raise ValueError("Z3 cuts are indexed by digit tuples; use tuple_cut")
    return OddSubsetCut(group, n, tuple(sorted(set(positions))), channel)


def tuple_cut(n: int, digits: Iterable[int], channel: int) -> OddSubsetCut:
    """Z3 cut for a digit tuple A in {0,1,2}^n and channel 1 or 2."""
    return OddSubsetCut(Z3, n, tuple(digits), channel)


def s_coefficients(cut: OddSubsetCut) -> tuple[int, ...]:
    """Integer coefficient vector of S_{A,g} on the projected coordinates."""
    n = cut.n
    if cut.group is Z3:
        table = Z3_NORMALS_U if cut.channel == 1 else Z3_NORMALS_W
        coeffs: list[int] = []
        for a in cut.subset:
            coeffs.extend(table[a])
        return tuple(coeffs)
    inside = set(cut.subset)
    coeffs = []
    for j in range(1, n + 1):
        sign = -1 if j in inside else 1
        for g in cut.group.nonzero:
            coeffs.append(0 if cut.group is Z2xZ2 and g == cut.channel else sign)
    return tuple(coeffs)


def s_value(cut: OddSubsetCut, point: Sequence) -> Fraction:
    """Exact value of the cut functional S_{A,g} at a point."""
    coeffs = s_coefficients(cut)
    if len(point) != len(coeffs):
        raise ValueError(
            f"point of length {len(point)} does not match R^{len(coeffs)}")
    return sum((c * Fraction(x) for c, x in zip(coeffs, point)),
               start=Fraction(0))


MINUS = "minus"
PLUS = "plus"


def cut_halfspace(cut: OddSubsetCut, side: str) -> HalfSpace:
    """The halfspace S_{A,g} <= rhs (minus) or S_{A,g} >= rhs (plus)."""
    coeffs = s_coefficients(cut)
    if side == MINUS:
        return HalfSpace.of(coeffs, cut.rhs)
    if side == PLUS:
        return HalfSpace.of(tuple(-c for c in coeffs), -cut.rhs)
    raise ValueError(f"side must be {MINUS!r} or {PLUS!r}, got {side!r}")


def ambient(group: Group, n: int) -> HPolytope:
    """The box or product of unit simplices containing the polytope.

    Z2: the cube [0,1]^n.  Z2xZ2 and Z3: per block, all coordinates
    nonnegative with block sum at most 1.
    """
    _check_n(n, 1)
    d = ambient_dim(group, n)
    width = block_width(group)
    halfspaces = []
    for i in range(d):
        normal = tuple(-1 if j == i else 0 for j in range(d))
        halfspaces.append(HalfSpace.of(normal, 0))
    for j in range(n):
        normal = tuple(1 if j * width <= i < (j + 1) * width else 0
                       for i in range(d))
        halfspaces.append(HalfSpace.of(normal, 1))
    return HPolytope(d, tuple(halfspaces))


def _encode_tuple(group: Group, entries: tuple[int, ...]) -> tuple[int, ...]:
    width = block_width(group)
    point = []
    for g in entries:
        block = [0] * width
        if g != 0:
            block[g - 1] = 1
        point.extend(block)
    return tuple(point)


def vertices(group: Group, n: int) -> VPolytope:
    """One 0/1 point per zero-sum n-tuple; |G|^(n-1) vertices in R^((|G|-1)n)."""
    _check_n(n)
    pts = [_encode_tuple(group, t) for t in zero_sum_tuples(group, n)]
    return VPolytope(ambient_dim(group, n), tuple(pts))


def facet_cuts(group: Group, n: int) -> tuple[OddSubsetCut, ...]:
    """All cuts whose plus side is a facet, in (channel, index) order.

    Z2: odd subsets of [n] by ascending bitmask.  Z2xZ2: the same per
    channel a, b, c.  Z3: digit tuples with sum 2 mod 3 in lexicographic
    order, channels 1 then 2.
    """
    _check_n(n, 1)
    cuts = []
    if group is Z3:
        for channel in (1, 2):
            for digits in itertools.product((0, 1, 2), repeat=n):
                if sum(digits) % 3 == 2:
                    cuts.append(tuple_cut(n, digits, channel))
        return tuple(cuts)
    channels = (1,) if group is Z2 else (1, 2, 3)
    for channel in channels:
        for mask in range(1, 1 << n):
            if bin(mask).count("1") % 2 == 1:
                positions = [j + 1 for j in range(n) if mask >> j & 1]
                cuts.append(subset_cut(group, n, positions, channel))
    return tuple(cuts)


def facets(group: Group, n: int) -> HPolytope:
    """The verbatim facet system: ambient bounds plus all plus-side cuts."""
    _check_n(n)
    base = ambient(group, n)
    cut_rows = tuple(cut_halfspace(c, PLUS) for c in facet_cuts(group, n))
    return base.with_halfspaces(cut_rows)


def lattice(group: Group, n: int) -> LatticeBasis:
    """The lattice generated by the vertex set, as an explicit basis.

    The vertex differences satisfy one parity constraint per independent
    character of the group, which pins the lattice down exactly: Z2 has even
    coordinate sum (index 2), Z2xZ2 has two even block-character sums
    (index 4), Z3 has digit-weighted sum divisible by 3 (index 3).  The
    explicit bases below generate precisely these lattices for every
    n >= 2, including n = 2 where too few vertices exist to span the space
    on their own.
    """
    _check_n(n)
    d = ambient_dim(group, n)
    width = block_width(group)

    def unit(block: int, g: int) -> list[int]:
        row = [0] * d
        row[block * width + (g - 1)] = 1
        return row

    def combine(*terms) -> tuple[int, ...]:
        row = [0] * d
        for coeff, vec in terms:
            for i, v in enumerate(vec):
                row[i] += coeff * v
        return tuple(row)

    gens: list[tuple[int, ...]] = []
    if group is Z2:
        gens.append(combine((2, unit(0, 1))))
        for j in range(1, n):
            gens.append(combine((1, unit(0, 1)), (1, unit(j, 1))))
    elif group is Z3:
        gens.append(combine((3, unit(0, 1))))
        gens.append(combine((1, unit(0, 1)), (1, unit(0, 2))))
        for j in range(1, n):
            gens.append(combine((1, unit(j, 1)), (-1, unit(0, 1))))
            gens.append(combine((1, unit(j, 2)), (-1, unit(0, 2))))
    else:
        gens.append(combine((2, unit(0, 1))))
        gens.append(combine((2, unit(0, 2))))
        gens.append(combine((1, unit(0, 3)), (-1, unit(0, 1)), (-1, unit(0, 2))))
        for j in range(1, n):
            for g in (1, 2, 3):
                gens.append(combine((1, unit(j, g)), (-1, unit(0, g))))
    return LatticeBasis(d, tuple(gens))


def vertex_generators(group: Group, n: int) -> LatticeBasis:
    """The raw vertex vectors as lattice generators.

    For n >= 3 these span the same lattice as ``lattice(group, n)``; at
    n = 2 they are rank-deficient, which is why the explicit basis exists.
    """
    vp = vertices(group, n)
    rows = tuple(tuple(int(v) for v in p) for p in vp.vertices)
    return LatticeBasis(vp.dim, rows)


def model_lattice_index(group: Group) -> int:
    """Index of the model lattice inside Z^dim: 2, 4, 3 for Z2, Z2xZ2, Z3."""
    return {Z2: 2, Z2xZ2: 4, Z3: 3}[group]


def group_from_cli(name: str) -> Group:
    return group_by_name(name)
