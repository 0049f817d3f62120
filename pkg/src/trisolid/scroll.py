"""
trisolid.scroll - Invariants of projective bundles and polarized manifolds.

Scrolls over P^1 are given by a normalized splitting O + O(a_1) + ... and a
twist b; scrolls over surfaces by the rank-2 bundle E with Y = P(E).
Classes on Y = P(E) are kept as formal pairs (multiple of the tautological
class H, class pulled back from the base); the threefold intersection ring
is never materialized.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from trisolid.bundles import RankTwoBundle, sym2_twisted_c1
from trisolid.errors import (
    BasisMismatchError,
    InternalConsistencyError,
    InvalidInputError,
    NonDivisibleClassError,
    NonIntegralGenusError,
)
from trisolid.intersection import (
    DivisorClass,
    SurfaceModel,
    canonical_class,
    intersect,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ScrollOverCurve:
    """P(O + O(a_1) + ... + O(a_{n-1})) over P^1 polarized by xi + bF."""

    alphas: Tuple[int, ...]
    b: int
    n: int

    def __post_init__(self) -> None:
        if len(self.alphas) != self.n - 1:
            raise InvalidInputError(
                "ScrollOverCurve", f"need {self.n - 1} splitting degrees"
            )
        if any(a < 0 for a in self.alphas) or list(self.alphas) != sorted(self.alphas):
            raise InvalidInputError(
                "ScrollOverCurve", f"splitting {self.alphas} is not normalized"
            )
        if self.b < 1:
            raise InvalidInputError("ScrollOverCurve", f"twist b={self.b} not ample")

    @property
    def alpha(self) -> int:
        return sum(self.alphas)

    @property
    def is_product_scroll(self) -> bool:
        """d = n exactly for P^1 x P^{n-1} polarized by O(1,1)."""
        return self.alpha == 0 and self.b == 1


@dataclass(frozen=True)
class ScrollOverSurface:
    """Y = P_X(E) with tautological class H; E is assumed ample and spanned."""

    bundle: RankTwoBundle

    @property
    def base(self) -> SurfaceModel:
        return self.bundle.base

    @property
    def adjoint(self) -> DivisorClass:
        """K_X + det E."""
        return canonical_class(self.base) + self.bundle.c1


@dataclass(frozen=True, slots=True)
class FormalClass:
    """A class h_coeff * H + pi^*(pullback) on Y = P(E)."""

    h_coeff: int
    pullback: DivisorClass

    def __add__(self, other: FormalClass) -> FormalClass:
        return FormalClass(self.h_coeff + other.h_coeff, self.pullback + other.pullback)

    def __sub__(self, other: FormalClass) -> FormalClass:
        return FormalClass(self.h_coeff - other.h_coeff, self.pullback - other.pullback)

    def __mul__(self, k: int) -> FormalClass:
        if isinstance(k, bool) or not isinstance(k, int):
            return NotImplemented
        return FormalClass(k * self.h_coeff, k * self.pullback)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.h_coeff == 0 and self.pullback.is_zero()


@dataclass(frozen=True, slots=True)
class PolarizedData:
    """Numeric data of a polarized manifold (X, L)."""

    dim: int
    degree: int
    h0: int
    sectional_genus: Optional[int] = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise InvalidInputError("PolarizedData", f"degree {self.degree} < 1")


@dataclass(frozen=True, slots=True)
class DualCurveScroll:
    """A d-uple plane which is a scroll over a smooth plane curve of degree d."""

    cover_degree: int
    base_genus: int


# -----------------------------------------------------------------------------
# Scrolls over P^1
# -----------------------------------------------------------------------------


def degree_over_P1(s: ScrollOverCurve) -> Tuple[int, int]:
    """Degree d = alpha + n b (Chern-Wu) and sections h0 = n + d."""
    d = s.alpha + s.n * s.b
    return d, s.n + d


def scroll_examples() -> List[Tuple[ScrollOverCurve, int, int]]:
    """
    The classical scrolls of degree d over P^1 projected to P^n.

    (2,2) the quadric surface as a double plane, (2,3) the rational cubic
    scroll as a triple plane, (3,3) the Segre P^1 x P^2 as a triple solid.
    """
    scrolls = [
        ScrollOverCurve((0,), 1, 2),
        ScrollOverCurve((1,), 1, 2),
        ScrollOverCurve((0, 0), 1, 3),
    ]
    return [(s, *degree_over_P1(s)) for s in scrolls]


def dual_curve_scroll(d: int) -> DualCurveScroll:
    """
    Numeric data of the incidence construction over a curve with smooth dual.

    The surface is a P^1-bundle over the dual curve, a smooth plane curve of
    degree d, and maps with degree d onto P^2.
    """
    if d < 2:
        raise InvalidInputError("dual_curve_scroll", f"degree {d} < 2")
    return DualCurveScroll(cover_degree=d, base_genus=comb(d - 1, 2))


# -----------------------------------------------------------------------------
# Scrolls over surfaces
# -----------------------------------------------------------------------------


def canonical_of_scroll(s: ScrollOverSurface) -> FormalClass:
    """K_Y = -2H + pi^*(K_X + det E)."""
    return FormalClass(-2, s.adjoint)


def ramification_of_triple_solid(s: ScrollOverSurface) -> FormalClass:
    """R = K_Y + 4H = 2H + pi^*(K_X + det E)."""
    ramification = FormalClass(2, s.adjoint)
    k = canonical_of_scroll(s)
    if not (ramification - k - FormalClass(4, s.base.zero())).is_zero():
        raise InternalConsistencyError("ramification_of_triple_solid", "R != K_Y + 4H")
    return ramification


def conic_fibration_data(s: ScrollOverSurface) -> Tuple[DivisorClass, DivisorClass]:
    """
    (c1(F), B) for Y inside P(F), F = pi_*R, as a member of |2 xi + pi^* B|.

    F = S^2 E (x) (K_X + det E) and an empty discriminant forces
    2 c1(F) + 3B = 0.
    """
    c1f = sym2_twisted_c1(s.bundle, s.adjoint).c1
    try:
        b = -(2 * c1f).divide_exact(3)
    except NonDivisibleClassError as exc:
        raise InternalConsistencyError("conic_fibration_data", str(exc)) from exc
    return c1f, b


def sectional_genus(model: SurfaceModel, line: DivisorClass) -> int:
    """g(X, L) = 1 + (K + L).L / 2 on a surface."""
    if line.model_id != model.name:
        raise BasisMismatchError("sectional_genus", model.name, line.model_id)
    numerator = intersect(model, canonical_class(model) + line, line)
    if numerator % 2:
        raise NonIntegralGenusError("sectional_genus", numerator)
    return 1 + numerator // 2


def delta_genus(p: PolarizedData) -> int:
    """Fujita's Delta-genus dim + L^dim - h0(L)."""
    return p.dim + p.degree - p.h0


def hyperplane_ascent_delta(h0_section: int) -> int:
    """
    Delta-genus of a threefold Z with a triple-plane surface section Y.

    h0(Z, H) = 1 + h0(Y, H_Y) because Z is regular, and H^3 = H_Y^2 = 3.
    """
    return delta_genus(PolarizedData(dim=3, degree=3, h0=1 + h0_section))


def plane_sections(a: int) -> int:
    """h0(P^2, O(a)) for a >= 0."""
    if a < 0:
        raise InvalidInputError("plane_sections", f"degree {a} < 0")
    return comb(a + 2, 2)
