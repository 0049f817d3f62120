"""
trisolid.tripleplane - Branch-curve and Tschirnhaus arithmetic for triple planes.

A general triple plane S -> P^2 has Tschirnhaus bundle T with Chern numbers
(b1, b2). Its branch curve has degree b = -2 b1 and c = 3 b2 cusps, and
Miranda's formulas give K_S^2 and e(S). All bound arithmetic uses exact
sympy rationals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import sympy as sp

from trisolid.errors import (
    IntegralityError,
    InternalConsistencyError,
    InvalidInputError,
)

logger = logging.getLogger(__name__)

# Centre (3/2, 3/2) and squared radius 1/2 of m^2 + n^2 - 3m - 3n + 4 = 0.
GAMMA_CENTRE = sp.Rational(3, 2)
GAMMA_RADIUS_SQUARED = sp.Rational(1, 2)


@dataclass(frozen=True, slots=True)
class TriplePlaneData:
    """Tschirnhaus Chern numbers and every invariant of S they determine."""

    b1: int
    b2: int
    b: int
    c: int
    g: int
    ksq: int
    euler: int
    pg: int
    chi: int

    def as_dict(self) -> dict[str, int]:
        return {
            "b1": self.b1,
            "b2": self.b2,
            "b": self.b,
            "c": self.c,
            "g": self.g,
            "ksq": self.ksq,
            "euler": self.euler,
            "pg": self.pg,
            "chi": self.chi,
        }


@dataclass(frozen=True, slots=True)
class CuspBounds:
    """
    Admissible range lower_strict < c <= upper for the cusp count.

    `refined` is the bound for a rational S whose minimal reduction is not
    P^2; it only binds when `refined_applicable` is set.
    """

    lower_strict: sp.Rational
    upper_terms: Tuple[sp.Rational, sp.Rational]
    refined: sp.Rational
    refined_applicable: bool

    @property
    def upper(self) -> sp.Rational:
        return min(self.upper_terms)

    @property
    def upper_rational_refined(self) -> Optional[sp.Rational]:
        return self.refined if self.refined_applicable else None

    def admits(self, c: int) -> bool:
        if not self.lower_strict < c <= self.upper:
            return False
        return not (self.refined_applicable and c > self.refined)


# -----------------------------------------------------------------------------
# Miranda's formulas
# -----------------------------------------------------------------------------


def miranda(b1: int, b2: int) -> Tuple[int, int]:
    """(K^2, e) of a general triple plane from the Tschirnhaus Chern numbers."""
    ksq = 27 + 12 * b1 + 2 * b1 * b1 - 3 * b2
    euler = 9 + 6 * b1 + 4 * b1 * b1 - 9 * b2
    return ksq, euler


def _exact(quantity: str, numerator: int, denominator: int) -> int:
    if numerator % denominator:
        raise IntegralityError(quantity, numerator, denominator)
    return numerator // denominator


def branch_invariants(b: int, c: int) -> TriplePlaneData:
    """
    Invariants of S from the branch degree b and the cusp count c.

    p_g = b(b-6)/8 + 2 - c/3, b = 2g + 4, and
    K^2 = 27 - 6b + b^2/2 - c, e = 9 - 3b + b^2 - 3c.
    """
    if b <= 0 or b % 2:
        raise InvalidInputError("branch_invariants", f"b={b} must be positive and even")
    if c < 0:
        raise InvalidInputError("branch_invariants", f"c={c} must be >= 0")
    pg = _exact("p_g", 3 * b * (b - 6) + 48 - 8 * c, 24)
    g = _exact("g", b - 4, 2)
    ksq = 27 - 6 * b + b * b // 2 - c
    euler = 9 - 3 * b + b * b - 3 * c
    return TriplePlaneData(
        b1=-b // 2,
        b2=_exact("b2", c, 3),
        b=b,
        c=c,
        g=g,
        ksq=ksq,
        euler=euler,
        pg=pg,
        chi=1 + pg,
    )


def from_tschirnhaus(b1: int, b2: int) -> TriplePlaneData:
    """branch_invariants for T with c1(T) = b1 < 0 and c2(T) = b2 >= 0."""
    if b1 >= 0:
        raise InvalidInputError("from_tschirnhaus", f"b1={b1} must be negative")
    return branch_invariants(-2 * b1, 3 * b2)


def decomposable_invariants(m: int, n: int) -> TriplePlaneData:
    """Invariants for T = O(-m) + O(-n); cross-checked against branch_invariants."""
    if m < 1 or n < 1:
        raise InvalidInputError("decomposable_invariants", f"(m,n)=({m},{n})")
    pg = _exact("p_g", m * m + n * n - 3 * m - 3 * n, 2) + 2
    ksq = 2 * (m + n - 3) ** 2 - 3 * (m * n - 3)
    euler = 4 * (m + n) ** 2 - 6 * (m + n) - 9 * (m * n - 1)
    data = TriplePlaneData(
        b1=-(m + n),
        b2=m * n,
        b=2 * (m + n),
        c=3 * m * n,
        g=m + n - 2,
        ksq=ksq,
        euler=euler,
        pg=pg,
        chi=1 + pg,
    )
    if data != branch_invariants(data.b, data.c):
        raise InternalConsistencyError(
            "decomposable_invariants", f"(m,n)=({m},{n}) disagrees with branch data"
        )
    return data


def ramification_square(data: TriplePlaneData) -> int:
    """R_S^2 = (K_S + 3H_S)^2 = K_S^2 + 6(2g - 2) + 9."""
    return data.ksq + 6 * (data.b - 6) + 9


def rational_blowup_count(data: TriplePlaneData) -> sp.Rational:
    """t = (2e - K^2)/3, blow-ups down to a Segre-Hirzebruch surface."""
    return sp.Rational(2 * data.euler - data.ksq, 3)


# -----------------------------------------------------------------------------
# Decomposable Tschirnhaus bundles with p_g = 0
# -----------------------------------------------------------------------------


def on_gamma(m: int, n: int) -> bool:
    return m * m + n * n - 3 * m - 3 * n + 4 == 0


def gamma_search_box() -> range:
    """
    Integers x with (x - 3/2)^2 <= 1/2, i.e. (2x - 3)^2 <= 2.

    Every integral point of the circle has both coordinates in this range.
    """
    reach = sp.integer_nthroot(int(4 * GAMMA_RADIUS_SQUARED), 2)[0]
    low = int(sp.ceiling((3 - reach) / sp.Integer(2)))
    high = int(sp.floor((3 + reach) / sp.Integer(2)))
    return range(low, high + 1)


def gamma_integral_points() -> FrozenSet[Tuple[int, int]]:
    """All integral points of m^2 + n^2 - 3m - 3n + 4 = 0."""
    box = gamma_search_box()
    points = frozenset((m, n) for m in box for n in box if on_gamma(m, n))
    logger.debug("gamma: scanned %s, found %s", box, sorted(points))
    return points


# -----------------------------------------------------------------------------
# Cusp bounds
# -----------------------------------------------------------------------------


def cusp_bounds(b: int, s: int, rational_non_p2: bool = False) -> CuspBounds:
    """
    b^2/6 < c <= min{ b(5b-6)/16 - s/2, 3b(b-6)/8 + 6 }.

    The first upper term comes from 3e(S) - K_S^2 >= 4s, the second from
    p_g(S) >= 0. For rational S not over P^2, c <= 3b^2/10 - 3(s+3)/5.
    """
    if b <= 0 or b % 2:
        raise InvalidInputError("cusp_bounds", f"b={b} must be positive and even")
    if s < 1:
        raise InvalidInputError("cusp_bounds", f"s={s} must be >= 1")
    rb, rs = sp.Integer(b), sp.Integer(s)
    return CuspBounds(
        lower_strict=rb**2 / 6,
        upper_terms=(
            rb * (5 * rb - 6) / 16 - rs / 2,
            sp.Rational(3, 8) * rb * (rb - 6) + 6,
        ),
        refined=sp.Rational(3, 10) * rb**2 - sp.Rational(3, 5) * (rs + 3),
        refined_applicable=rational_non_p2,
    )
