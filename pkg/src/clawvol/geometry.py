"""Exact polyhedral geometry over the rationals.

Everything in this module is computed with integer or ``fractions.Fraction``
arithmetic; no floats are ever produced.  The central algorithm is a double
description vertex enumerator working on integer homogeneous coordinates,
which turns a halfspace description into the exact vertex set of a bounded
polyhedron and reliably distinguishes empty from unbounded inputs.

Conventions:

* points are tuples of ``Fraction``;
* a halfspace is ``{x : <normal, x> <= offset}``;
* vertex sets are kept deduplicated and lexicographically sorted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
Point = tuple[Fraction, ...]


class GeometryError(Exception):
    """Base class for geometric failure modes."""


class UnboundedError(GeometryError):
    """The polyhedron has a recession direction, so it has no vertex list."""


class RankDeficientError(GeometryError):
    """Generators fail to span the ambient space."""


class GuardRailError(GeometryError):
    """A computation was refused because it exceeds the default size limits."""


def _as_point(values: Iterable) -> Point:
    return tuple(Fraction(v) for v in values)


def _primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries, keeping signs."""
    g = 0
    for v in vec:
        g = math.gcd(g, v)
    if g <= 1:
        return tuple(vec)
    return tuple(v // g for v in vec)


def _scaled_integers(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Clear denominators of a rational vector, then reduce to primitive."""
    lcm = 1
    for v in values:
        lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
    return _primitive([int(v * lcm) for v in values])


@dataclass(frozen=True)
class HalfSpace:
    """Closed halfspace ``{x : <normal, x> <= offset}``."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    @staticmethod
    def of(normal: Iterable, offset) -> "HalfSpace":
        return HalfSpace(_as_point(normal), Fraction(offset))

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, point: Sequence) -> Fraction:
        """Evaluate ``<normal, point>``."""
        return sum((a * Fraction(x) for a, x in zip(self.normal, point)),
                   start=Fraction(0))

    def slack(self, point: Sequence) -> Fraction:
        return self.offset - self.value(point)

    def holds(self, point: Sequence) -> bool:
        return self.value(point) <= self.offset

    def is_tight(self, point: Sequence) -> bool:
        return self.value(point) == self.offset

    def flipped(self) -> "HalfSpace":
        """The opposite halfspace ``{x : <normal, x> >= offset}`` in <= form."""
        return HalfSpace(tuple(-a for a in self.normal), -self.offset)

    def canonical(self) -> "HalfSpace":
        """Scale to primitive integer coefficients, preserving orientation."""
        row = self.integer_form()
        return HalfSpace(tuple(Fraction(a) for a in row[:-1]), Fraction(row[-1]))

    def integer_form(self) -> tuple[int, ...]:
        """The row ``(a_1, ..., a_d, b)`` as primitive integers."""
        return _scaled_integers(tuple(self.normal) + (self.offset,))


@dataclass(frozen=True)
class HPolytope:
    """A polyhedron given by finitely many halfspaces in R^dim."""

    dim: int
    halfspaces: tuple[HalfSpace, ...]

    def __post_init__(self):
        for hs in self.halfspaces:
            if hs.dim != self.dim:
                raise ValueError(
                    f"halfspace in R^{hs.dim} does not match ambient R^{self.dim}")

    def contains(self, point: Sequence) -> bool:
        return all(hs.holds(point) for hs in self.halfspaces)

    def with_halfspaces(self, extra: Iterable[HalfSpace]) -> "HPolytope":
        return HPolytope(self.dim, self.halfspaces + tuple(extra))


def _sorted_unique_points(points: Iterable[Iterable]) -> tuple[Point, ...]:
    return tuple(sorted(set(_as_point(p) for p in points)))


@dataclass(frozen=True)
class VPolytope:
    """A polytope given by points; stored deduplicated and lex-sorted.

    The stored points are not forced to be extreme.  ``canonicalize``
    removes the non-extreme ones.
    """

    dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        clean = _sorted_unique_points(self.vertices)
        object.__setattr__(self, "vertices", clean)
        for p in clean:
            if len(p) != self.dim:
                raise ValueError(
                    f"point of length {len(p)} does not match ambient R^{self.dim}")

    @staticmethod
    def from_points(dim: int, points: Iterable[Iterable]) -> "VPolytope":
        return VPolytope(dim, tuple(tuple(p) for p in points))

    def is_empty(self) -> bool:
        return not self.vertices


# ---------------------------------------------------------------------------
# Double description vertex enumeration
# ---------------------------------------------------------------------------

def _dd_cone(rows: list[tuple[int, ...]], dim: int):
    """Extreme rays and lineality of ``{y : <row, y> >= 0 for all rows}``.

    Pure integer double description.  Rays are primitive integer vectors;
    each carries a bitmask of the constraints it satisfies with equality.
    Returns ``(rays, zero_sets, lineality)``.
    """
    lineality: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[int, ...]] = []
    zsets: list[int] = []

    for k, c in enumerate(rows):
        bit = 1 << k
        lin_vals = [sum(ci * li for ci, li in zip(c, l)) for l in lineality]
        pivot = next((i for i, t in enumerate(lin_vals) if t != 0), None)
        if pivot is not None:
            # Case A: the new constraint cuts the lineality space.  One
            # lineality generator becomes an extreme ray; the rest, and all
            # existing rays, are shifted onto the constraint's hyperplane.
            lstar, tstar = lineality[pivot], lin_vals[pivot]
            if tstar < 0:
                lstar, tstar = tuple(-v for v in lstar), -tstar
            new_lin = []
            for i, l in enumerate(lineality):
                if i == pivot:
                    continue
                t = lin_vals[i]
                new_lin.append(_primitive([tstar * a - t * b
                                           for a, b in zip(l, lstar)]))
            new_rays = []
            for r in rays:
                t = sum(ci * ri for ci, ri in zip(c, r))
                new_rays.append(_primitive([tstar * a - t * b
                                            for a, b in zip(r, lstar)]))
            lineality = new_lin
            rays = new_rays + [lstar]
            zsets = [z | bit for z in zsets] + [bit - 1]
            continue

        # Case B: constraint is orthogonal to the lineality space; split the
        # current rays and combine adjacent positive/negative pairs.
        vals = [sum(ci * ri for ci, ri in zip(c, r)) for r in rays]
        if all(v >= 0 for v in vals):
            zsets = [z | bit if v == 0 else z for z, v in zip(zsets, vals)]
            continue

        pos = [i for i, v in enumerate(vals) if v > 0]
        zero = [i for i, v in enumerate(vals) if v == 0]
        neg = [i for i, v in enumerate(vals) if v < 0]

        implicit = ~0
        for z in zsets:
            implicit &= z
        # A pair of adjacent extreme rays shares at least (pointed cone
        # dimension - 2) tight constraints beyond the implicit equalities.
        needed = dim - len(lineality) - 2 - bin(implicit & (bit - 1)).count("1")

        new_rays = []
        new_zsets = []
        for ip in pos:
            zp = zsets[ip]
            for im in neg:
                common = zp & zsets[im]
                if common.bit_count() < needed:
                    continue
                if any(
                    j != ip and j != im and common & ~zsets[j] == 0
                    for j in range(len(rays))
                ):
                    continue
                vp, vm = vals[ip], vals[im]
                combo = [vp * a - vm * b for a, b in zip(rays[im], rays[ip])]
                new_rays.append(_primitive(combo))
                new_zsets.append(common | bit)

        rays = [rays[i] for i in pos] + [rays[i] for i in zero] + new_rays
        zsets = ([zsets[i] for i in pos]
                 + [zsets[i] | bit for i in zero]
                 + new_zsets)

    return rays, zsets, lineality


def vertex_enumeration(hp: HPolytope) -> VPolytope:
    """Exact vertex set of a bounded ``HPolytope``.

    Returns an empty ``VPolytope`` when the constraints are infeasible and
    raises ``UnboundedError`` when the feasible region has a recession
    direction, so the two degenerate outcomes are never confused.
    """
    d = hp.dim
    rows = [(1,) + (0,) * d]
    for hs in hp.halfspaces:
        coeffs = hs.integer_form()
        rows.append((coeffs[-1],) + tuple(-a for a in coeffs[:-1]))

    rays, _, lineality = _dd_cone(rows, d + 1)
    bounded_rays = [r for r in rays if r[0] > 0]
    if not bounded_rays:
        return VPolytope(d, ())
    if lineality or any(r[0] == 0 for r in rays):
        raise UnboundedError(
            f"polyhedron in R^{d} is unbounded; no vertex description exists")
    points = [tuple(Fraction(v, r[0]) for v in r[1:]) for r in bounded_rays]
    return VPolytope(d, tuple(points))


# ---------------------------------------------------------------------------
# Rank, affine dimension, hull membership
# ---------------------------------------------------------------------------

def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    work = [[Fraction(v) for v in row] for row in rows if any(row)]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for i in range(rank + 1, len(work)):
            factor = work[i][col] / pivot
            if factor:
                work[i] = [a - factor * b for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def affine_dim(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull: -1 for no points, 0 for one point."""
    pts = [_as_point(p) for p in points]
    if not pts:
        return -1
    base = pts[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
    diffs = [row for row in diffs if any(row)]
    if not diffs:
        return 0
    return matrix_rank(diffs)


def point_in_hull(point: Sequence, points: Sequence[Sequence]) -> bool:
    """Exact test for membership of ``point`` in the convex hull of ``points``.

    Phase-one simplex method with Bland's rule on the system
    ``sum(lambda_i * v_i) = point, sum(lambda_i) = 1, lambda >= 0``.
    """
    pts = [_as_point(p) for p in points]
    target = _as_point(point)
    if not pts:
        return False
    d = len(target)
    nvars = len(pts)
    nrows = d + 1

    rows = []
    rhs = []
    for i in range(d):
        rows.append([pts[j][i] for j in range(nvars)])
        rhs.append(target[i])
    rows.append([Fraction(1)] * nvars)
    rhs.append(Fraction(1))

    for i in range(nrows):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # Tableau columns: the lambda variables then one artificial per row.
    tab = [rows[i] + [Fraction(1 if j == i else 0) for j in range(nrows)]
           + [rhs[i]] for i in range(nrows)]
    basis = [nvars + i for i in range(nrows)]
    ncols = nvars + nrows

    obj = [sum(tab[i][j] for i in range(nrows)) for j in range(ncols + 1)]

    while True:
        enter = next(
            (j for j in range(nvars) if j not in basis and obj[j] > 0), None)
        if enter is None:
            break
        ratios = [
            (tab[i][ncols] / tab[i][enter], basis[i], i)
            for i in range(nrows) if tab[i][enter] > 0
        ]
        if not ratios:
            break
        _, _, leave = min(ratios)
        pivot = tab[leave][enter]
        tab[leave] = [v / pivot for v in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        if obj[enter]:
            f = obj[enter]
            obj = [a - f * b for a, b in zip(obj, tab[leave])]
        basis[leave] = enter

    return obj[ncols] == 0


def canonicalize(vp: VPolytope) -> VPolytope:
    """Drop every stored point lying in the convex hull of the others."""
    pts = list(vp.vertices)
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1 :]
        if not point_in_hull(p, others):
            keep.append(p)
    return VPolytope(vp.dim, tuple(keep))


def vh_consistent(vp: VPolytope, hp: HPolytope) -> bool:
    """Do the two descriptions define the same polytope?

    True when every stored point satisfies all halfspaces and the exact
    vertex enumeration of ``hp`` reproduces the extreme points of ``vp``.
    """
    if vp.dim != hp.dim:
        return False
    if not all(hp.contains(p) for p in vp.vertices):
        return False
    return vertex_enumeration(hp).vertices == canonicalize(vp).vertices


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeBasis:
    """Generators (rows, integer entries) of a finite-index sublattice of Z^dim."""

    dim: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = []
        for row in self.generators:
            if len(row) != self.dim:
                raise ValueError(
                    f"generator of length {len(row)} does not match Z^{self.dim}")
            clean = []
            for v in row:
                if int(v) != v:
                    raise ValueError("lattice generators must be integral")
                clean.append(int(v))
            gens.append(tuple(clean))
        object.__setattr__(self, "generators", tuple(gens))


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def lattice_index(basis: LatticeBasis) -> int:
    """Index in Z^dim of the sublattice spanned by the generators.

    Integer row reduction with unimodular operations; the index is the
    product of the pivots of the resulting triangular form.  Raises
    ``RankDeficientError`` when the generators do not span R^dim.
    """
    d = basis.dim
    rows = [list(r) for r in basis.generators]
    pivots = []
    top = 0
    for col in range(d):
        found = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        for i in range(top + 1, len(rows)):
            a, b = rows[top][col], rows[i][col]
            if b == 0:
                continue
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            rows[top], rows[i] = (
                [x * u + y * v for u, v in zip(rows[top], rows[i])],
                [-bg * u + ag * v for u, v in zip(rows[top], rows[i])],
            )
        pivots.append(abs(rows[top][col]))
        top += 1
    if len(pivots) < d:
        raise RankDeficientError(
            f"generators span rank {len(pivots)} < ambient dimension {d}")
    return math.prod(pivots)
