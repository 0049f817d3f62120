"""
trisolid.bundles - Chern-class calculus for rank-2 bundles on surfaces.

Bundles are represented by their Chern data only (c1 as a DivisorClass,
c2 as an integer), plus optional structure tags: the summands of a
decomposable bundle and the generic splitting type on lines.
Ampleness is never decided here except for split bundles on P^1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from trisolid.errors import BasisMismatchError, InvalidInputError
from trisolid.intersection import (
    DivisorClass,
    SurfaceModel,
    intersect,
    projective_plane,
    self_intersection,
)

logger = logging.getLogger(__name__)


class Stability(Enum):
    """Side of the Bogomolov inequality c1^2 - 4 c2 <= 0."""

    STABLE_SIDE = "stable-side"
    SEMISTABLE_BOUNDARY = "properly-semistable-boundary"
    UNSTABLE_SIDE = "unstable-side"


@dataclass(frozen=True)
class RankTwoBundle:
    """
    Chern data of a rank-2 vector bundle on a surface model.

    If `summands` = (M, N) is given the bundle is decomposable (or an
    extension of N by M) and c1 = M + N, c2 = M.N must hold.
    """

    base: SurfaceModel
    c1: DivisorClass
    c2: int
    summands: Optional[Tuple[DivisorClass, DivisorClass]] = None
    splitting_type: Optional[Tuple[int, int]] = None

    def __post_init__(self) -> None:
        _check_on(self.base, self.c1, "RankTwoBundle")
        if self.summands is not None:
            m, n = self.summands
            if m + n != self.c1 or intersect(self.base, m, n) != self.c2:
                raise InvalidInputError(
                    "RankTwoBundle", "summands do not match (c1, c2)"
                )
        if self.splitting_type is not None:
            a1, a2 = self.splitting_type
            if a1 < a2:
                raise InvalidInputError(
                    "RankTwoBundle", f"splitting type {self.splitting_type} not sorted"
                )

    @classmethod
    def split(
        cls, base: SurfaceModel, m: DivisorClass, n: DivisorClass
    ) -> RankTwoBundle:
        """The decomposable bundle O(M) + O(N)."""
        _check_on(base, m, "split")
        _check_on(base, n, "split")
        return cls(base, m + n, intersect(base, m, n), summands=(m, n))

    @classmethod
    def tangent_plane(cls) -> RankTwoBundle:
        """The tangent bundle of P^2: c1 = 3h, c2 = 3."""
        plane = projective_plane()
        return cls(plane, plane.divisor(3), 3, splitting_type=(2, 1))

    @property
    def c1_squared(self) -> int:
        return self_intersection(self.base, self.c1)


@dataclass(frozen=True)
class RankThreeBundleData:
    """First Chern class of a rank-3 bundle."""

    base: SurfaceModel
    c1: DivisorClass
    rank: int = 3

    def __post_init__(self) -> None:
        _check_on(self.base, self.c1, "RankThreeBundleData")


@dataclass(frozen=True, slots=True)
class BogomolovResult:
    discriminant: int
    verdict: Stability


def _check_on(base: SurfaceModel, d: DivisorClass, operation: str) -> None:
    if d.model_id != base.name or len(d) != base.rank:
        raise BasisMismatchError(operation, base.name, d.model_id)


# -----------------------------------------------------------------------------
# Operations
# -----------------------------------------------------------------------------


def twist(e: RankTwoBundle, d: DivisorClass) -> RankTwoBundle:
    """
    E (x) O(D): c1 + 2D and c2 + c1.D + D^2.

    A splitting type on lines of P^2 shifts by deg(D|line); on other bases
    there is no distinguished line and the tag is dropped.
    """
    _check_on(e.base, d, "twist")
    summands = None
    if e.summands is not None:
        summands = (e.summands[0] + d, e.summands[1] + d)
    splitting = None
    if e.splitting_type is not None and e.base.name == "P2":
        shift = d.coeffs[0]
        splitting = (e.splitting_type[0] + shift, e.splitting_type[1] + shift)
    return RankTwoBundle(
        e.base,
        e.c1 + 2 * d,
        e.c2 + intersect(e.base, e.c1, d) + self_intersection(e.base, d),
        summands=summands,
        splitting_type=splitting,
    )


def sym2_twisted_c1(e: RankTwoBundle, line: DivisorClass) -> RankThreeBundleData:
    """c1 of S^2 E (x) L, which has rank 3: 3 c1(E) + 3 L."""
    _check_on(e.base, line, "sym2_twisted_c1")
    return RankThreeBundleData(e.base, 3 * e.c1 + 3 * line)


def bogomolov(e: RankTwoBundle) -> BogomolovResult:
    """Bogomolov discriminant c1^2 - 4 c2 and the side it falls on."""
    disc = e.c1_squared - 4 * e.c2
    if disc < 0:
        verdict = Stability.STABLE_SIDE
    elif disc == 0:
        verdict = Stability.SEMISTABLE_BOUNDARY
    else:
        verdict = Stability.UNSTABLE_SIDE
    return BogomolovResult(disc, verdict)


def cokernel_of_line(base: SurfaceModel, d: DivisorClass) -> RankTwoBundle:
    """
    Chern data of E in 0 -> O(-D) -> O^3 -> E -> 0.

    c(E) = 1 / (1 - D) = 1 + D + D^2, so c1 = D and c2 = D^2.
    """
    _check_on(base, d, "cokernel_of_line")
    return RankTwoBundle(base, d, self_intersection(base, d))


def ample_split_rank2_on_P1(c1_degree: int) -> List[Tuple[int, int]]:
    """
    All splitting types (a1, a2) with a1 >= a2 >= 1 and a1 + a2 = c1_degree.

    O(a1) + O(a2) on P^1 is ample iff both degrees are positive.
    """
    pairs = [(c1_degree - a2, a2) for a2 in range(1, c1_degree // 2 + 1)]
    logger.debug("ample splittings of degree %d: %s", c1_degree, pairs)
    return pairs
