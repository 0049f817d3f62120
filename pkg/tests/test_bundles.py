"""
Tests for trisolid.bundles module.
"""

import pytest

from trisolid.bundles import (
    RankTwoBundle,
    Stability,
    ample_split_rank2_on_P1,
    bogomolov,
    cokernel_of_line,
    sym2_twisted_c1,
    twist,
)
from trisolid.errors import BasisMismatchError, InvalidInputError


class TestRankTwoBundle:
    """Tests for RankTwoBundle construction."""

    def test_split(self, plane):
        h = plane.generator("h")
        e = RankTwoBundle.split(plane, 2 * h, h)
        assert e.c1.coeffs == (3,)
        assert e.c2 == 2
        assert e.c1_squared == 9

    def test_split_on_quadric(self, quadric):
        e = RankTwoBundle.split(quadric, quadric.divisor(1, 0), quadric.divisor(0, 1))
        assert e.c1.coeffs == (1, 1)
        assert e.c2 == 1

    def test_tangent_plane(self):
        t = RankTwoBundle.tangent_plane()
        assert t.c1.coeffs == (3,)
        assert t.c2 == 3
        assert t.splitting_type == (2, 1)

    def test_summands_must_match(self, plane):
        h = plane.generator("h")
        with pytest.raises(InvalidInputError):
            RankTwoBundle(plane, 2 * h, 2, summands=(h, h))

    def test_unsorted_splitting_type(self, plane):
        with pytest.raises(InvalidInputError):
            RankTwoBundle(plane, plane.divisor(4), 13, splitting_type=(1, 3))

    def test_c1_on_other_model(self, plane, quadric):
        with pytest.raises(BasisMismatchError):
            RankTwoBundle(plane, quadric.divisor(1, 1), 2)


class TestTwist:
    """Tests for twisting by a line bundle."""

    def test_tangent_twist(self, plane):
        t = twist(RankTwoBundle.tangent_plane(), plane.divisor(-4))
        assert t.c1.coeffs == (-5,)
        assert t.c2 == 7

    def test_twist_keeps_summands(self, obvious, plane):
        e = twist(obvious, plane.generator("h"))
        assert e.summands is not None
        assert e.summands[0].coeffs == (2,)
        assert (e.c1.coeffs, e.c2) == ((4,), 4)

    def test_twist_by_zero(self, candidate, plane):
        e = twist(candidate, plane.zero())
        assert (e.c1, e.c2) == (candidate.c1, candidate.c2)
        assert e.splitting_type == (2, 2)

    @pytest.mark.parametrize("d", [-4, -1, 1, 3])
    def test_twist_shifts_splitting_type(self, plane, d):
        t = twist(RankTwoBundle.tangent_plane(), plane.divisor(d))
        assert t.splitting_type == (2 + d, 1 + d)
        assert sum(t.splitting_type) == t.c1.coeffs[0]

    def test_twist_drops_splitting_type_off_plane(self, quadric):
        e = RankTwoBundle(quadric, quadric.divisor(1, 1), 1, splitting_type=(1, 0))
        assert twist(e, quadric.divisor(1, 0)).splitting_type is None

    def test_twist_other_model(self, candidate, quadric):
        with pytest.raises(BasisMismatchError):
            twist(candidate, quadric.divisor(1, 1))


class TestBogomolov:
    """Tests for the Bogomolov discriminant."""

    def test_obvious_boundary(self, obvious):
        result = bogomolov(obvious)
        assert result.discriminant == 0
        assert result.verdict is Stability.SEMISTABLE_BOUNDARY

    def test_candidate_stable_side(self, candidate):
        result = bogomolov(candidate)
        assert result.discriminant == -36
        assert result.verdict is Stability.STABLE_SIDE

    def test_unstable_side(self, plane):
        h = plane.generator("h")
        result = bogomolov(RankTwoBundle.split(plane, 3 * h, h))
        assert result.discriminant == 4
        assert result.verdict is Stability.UNSTABLE_SIDE


class TestDerivedBundles:
    """Tests for symmetric squares and cokernels."""

    def test_sym2_twisted(self, candidate, plane):
        f = sym2_twisted_c1(candidate, plane.generator("h"))
        assert f.rank == 3
        assert f.c1.coeffs == (15,)

    def test_cokernel_of_conic(self, plane):
        e = cokernel_of_line(plane, plane.divisor(2))
        assert (e.c1.coeffs, e.c2) == ((2,), 4)

    def test_cokernel_on_quadric(self, quadric):
        e = cokernel_of_line(quadric, quadric.divisor(1, 1))
        assert (e.c1.coeffs, e.c2) == ((1, 1), 2)


class TestSplittingsOnP1:
    """Tests for ample split bundles on P^1."""

    def test_degree_two(self):
        assert ample_split_rank2_on_P1(2) == [(1, 1)]

    def test_degree_four(self):
        assert ample_split_rank2_on_P1(4) == [(3, 1), (2, 2)]

    def test_degree_one_has_none(self):
        assert ample_split_rank2_on_P1(1) == []
