"""Closed-form degree and cut-piece volume formulas, in exact arithmetic.

Every formula is evaluated with ``fractions.Fraction``; the three degree
formulas must come out integral and an assertion enforces that, so a
transcription slip surfaces as a loud error instead of a wrong table.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from .geometry import GuardRailError
from .groups import Group, Z2, Z2xZ2, Z3

DEG_Z2 = "DegZ2"
DEG_Z2XZ2 = "DegZ2xZ2"
DEG_Z3 = "DegZ3"
Z2_CUT = "Z2Cut"
Z22_ONE_FACET = "Z22OneFacet"
Z22_TWO_FACET = "Z22TwoFacet"
Z22_THREE_FACET = "Z22ThreeFacet"
Z3_ONE_FACET = "Z3OneFacet"
Z3_TWO_FACET = "Z3TwoFacet"

FORMULA_TAGS = (
    DEG_Z2, DEG_Z2XZ2, DEG_Z3,
    Z2_CUT, Z22_ONE_FACET, Z22_TWO_FACET, Z22_THREE_FACET,
    Z3_ONE_FACET, Z3_TWO_FACET,
)


class FormulaError(Exception):
    """A formula produced a non-integral value where an integer is required."""


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


def _alternating_factorial_sum(n: int) -> Fraction:
    """sum over i of (-2)^i * C(n, i) * (3n)! / (2n+i)!."""
    total = Fraction(0)
    for i in range(n + 1):
        total += Fraction((-2) ** i * comb(n, i) * factorial(3 * n),
                          factorial(2 * n + i))
    return total


def degree_rational(group: Group, n: int) -> Fraction:
    """The degree formula before the integrality check."""
    _check_n(n)
    if group is Z2:
        return Fraction(factorial(n), 2) - Fraction(2) ** (n - 2)
    if group is Z3:
        return (Fraction(factorial(2 * n), 3 * 2 ** n)
                - Fraction(2) ** (n + 1) * Fraction(3) ** (n - 2)
                + Fraction(3) ** (n - 1) * n)
    return (Fraction(factorial(3 * n), 4 * 6 ** n)
            - 3 * Fraction(2) ** (n - 3) * _alternating_factorial_sum(n)
            + 3 * Fraction(4) ** (n - 2) * comb(2 * n, n)
            - n * Fraction(4) ** (n - 1))


def degree(group: Group, n: int) -> int:
    """Exact degree of the claw polytope's toric variety for this group."""
    value = degree_rational(group, n)
    if value.denominator != 1:
        raise FormulaError(
            f"degree({group}, {n}) evaluated to the non-integer {value}")
    return int(value)


def delta_set(a: Iterable[int], b: Iterable[int], c: Iterable[int]) -> frozenset[int]:
    """(A minus B,C) union (B minus A,C) union (C minus A,B) union (A and B and C).

    Its size always matches |A|+|B|+|C| in parity, so it is odd whenever the
    total is odd.
    """
    sa, sb, sc = frozenset(a), frozenset(b), frozenset(c)
    return frozenset(
        (sa - (sb | sc)) | (sb - (sa | sc)) | (sc - (sa | sb)) | (sa & sb & sc))


def cut_formula(tag: str, n: int, extra=None) -> Fraction:
    """Closed-form value of one theorem or cut-piece lemma.

    ``extra`` is required only for the three-channel tag: a triple
    (A, B, C) of position sets with odd total size; the value is then
    4 - 3/2^(n-1) when the combined difference set is a singleton and 0
    otherwise.
    """
    _check_n(n)
    if tag == Z2_CUT:
        return Fraction(1)
    if tag == Z22_ONE_FACET:
        return _alternating_factorial_sum(n)
    if tag == Z22_TWO_FACET:
        return comb(2 * n, n) - Fraction(n, 2 ** (n - 1))
    if tag == Z22_THREE_FACET:
        if extra is None:
            raise ValueError("the three-channel formula needs the (A, B, C) triple")
        a, b, c = extra
        if (len(frozenset(a)) + len(frozenset(b)) + len(frozenset(c))) % 2 == 0:
            raise ValueError("|A| + |B| + |C| must be odd")
        if len(delta_set(a, b, c)) == 1:
            return 4 - Fraction(3, 2 ** (n - 1))
        return Fraction(0)
    if tag == Z3_ONE_FACET:
        return 2 ** n - Fraction(n, 2 ** (n - 1))
    if tag == Z3_TWO_FACET:
        return 3 - Fraction(1, 2 ** (n - 2))
    if tag == DEG_Z2:
        return Fraction(degree(Z2, n))
    if tag == DEG_Z2XZ2:
        return Fraction(degree(Z2xZ2, n))
    if tag == DEG_Z3:
        return Fraction(degree(Z3, n))
    raise ValueError(f"unknown formula tag {tag!r}")


MAX_TABLE_N = 20


def degree_table(group: Group, n_min: int, n_max: int, *,
                 allow_big: bool = False) -> list[tuple[int, int]]:
    """Rows (n, degree) for n_min..n_max; values grow factorially, so the
    range is capped at n = 20 unless overridden."""
    if not 2 <= n_min <= n_max:
        raise ValueError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > MAX_TABLE_N and not allow_big:
        raise GuardRailError(
            f"table range ends at {n_max} > {MAX_TABLE_N}; pass the override to force")
    return [(n, degree(group, n)) for n in range(n_min, n_max + 1)]
