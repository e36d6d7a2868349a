"""Cross-checking the degree by independent routes.

Three ways to the same number: closed-form evaluation, arithmetic assembly
from cut-piece volumes, and brute-force geometry (enumerate vertices,
triangulate, measure in the model lattice).  They share no code beyond
exact rationals, so agreement is strong evidence and disagreement is a
bug somewhere specific.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .clawpoly import lattice, vertices
from .cuts import assemble
from .formulas import degree_rational
from .groups import Group
from .serialize import rat_to_str
from .volume import lattice_volume

FORMULA = "formula"
INCLUSION_EXCLUSION = "inclusion-exclusion"
TRIANGULATION = "triangulation"
METHODS = (FORMULA, INCLUSION_EXCLUSION, TRIANGULATION)


def degree_by_formula(group: Group, n: int) -> Fraction:
    return degree_rational(group, n)


def degree_by_assembly(group: Group, n: int) -> Fraction:
    return assemble(group, n)


def degree_by_triangulation(group: Group, n: int, *,
                            allow_big: bool = False) -> Fraction:
    """Degree as the lattice volume of the actual polytope.

    Exponential in n; the guard rails in the volume engine apply.
    """
    return lattice_volume(vertices(group, n), lattice(group, n),
                          allow_big=allow_big)


def degree_by_method(group: Group, n: int, method: str, *,
                     allow_big: bool = False) -> Fraction:
    if method == FORMULA:
        return degree_by_formula(group, n)
    if method == INCLUSION_EXCLUSION:
        return degree_by_assembly(group, n)
    if method == TRIANGULATION:
        return degree_by_triangulation(group, n, allow_big=allow_big)
    known = ", ".join(METHODS)
    raise ValueError(f"unknown method {method!r}; expected one of: {known}")


@dataclass(frozen=True)
class VerifyResult:
    group: Group
    n: int
    values: tuple[tuple[str, Fraction], ...]

    @property
    def consistent(self) -> bool:
        nums = [v for _, v in self.values]
        return all(v == nums[0] for v in nums)


def verify_degree(group: Group, n: int,
                  methods: tuple[str, ...] = METHODS, *,
                  allow_big: bool = False) -> VerifyResult:
    values = tuple(
        (m, degree_by_method(group, n, m, allow_big=allow_big))
        for m in methods)
    return VerifyResult(group, n, values)


def verify_text(result: VerifyResult) -> str:
    lines = [f"group={result.group.name} n={result.n}"]
    for method, value in result.values:
        lines.append(f"{method}: {rat_to_str(value)}")
    lines.append("consistent: " + ("yes" if result.consistent else "NO"))
    return "\n".join(lines) + "\n"


def verify_doc(result: VerifyResult) -> dict:
    return {
        "kind": "verify",
        "group": result.group.name,
        "n": result.n,
        "values": {m: rat_to_str(v) for m, v in result.values},
        "consistent": result.consistent,
    }
