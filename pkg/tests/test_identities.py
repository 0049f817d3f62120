"""
Property tests for the identities between the triple-plane formulas.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trisolid.bundles import (
    RankTwoBundle,
    ample_split_rank2_on_P1,
    bogomolov,
    twist,
)
from trisolid.intersection import (
    hirzebruch,
    intersect,
    projective_plane,
    quadric_surface,
    self_intersection,
)
from trisolid.scroll import ScrollOverCurve, degree_over_P1, sectional_genus
from trisolid.tripleplane import (
    branch_invariants,
    decomposable_invariants,
    from_tschirnhaus,
    miranda,
    ramification_square,
)

b1s = st.integers(min_value=-200, max_value=-1)
b2s = st.integers(min_value=0, max_value=2000)
degrees = st.integers(min_value=1, max_value=60)
coords = st.integers(min_value=-20, max_value=20)

QUADRIC = quadric_surface()
PLANE = projective_plane()
MODELS = [PLANE, QUADRIC, hirzebruch(1), hirzebruch(2)]


def divisors_on(model):
    return st.lists(coords, min_size=model.rank, max_size=model.rank).map(
        lambda cs: model.divisor(*cs)
    )


@st.composite
def scrolls(draw):
    n = draw(st.integers(min_value=2, max_value=6))
    alphas = draw(
        st.lists(
            st.integers(min_value=0, max_value=10), min_size=n - 1, max_size=n - 1
        )
    )
    b = draw(st.integers(min_value=1, max_value=10))
    return ScrollOverCurve(tuple(sorted(alphas)), b, n)


class TestTriplePlaneIdentities:
    """Identities over random Tschirnhaus Chern numbers."""

    @settings(max_examples=1000)
    @given(b1=b1s, b2=b2s)
    def test_miranda_matches_branch_data(self, b1, b2):
        data = from_tschirnhaus(b1, b2)
        assert miranda(b1, b2) == (data.ksq, data.euler)
        assert (data.b, data.c) == (-2 * b1, 3 * b2)
        assert data.b == 2 * data.g + 4

    @settings(max_examples=1000)
    @given(b1=b1s, b2=b2s)
    def test_three_ksq_minus_euler(self, b1, b2):
        ksq, euler = miranda(b1, b2)
        assert 3 * ksq - euler == 72 + 30 * b1 + 2 * b1 * b1

    @settings(max_examples=1000)
    @given(b1=b1s, b2=b2s)
    def test_ramification_square(self, b1, b2):
        data = from_tschirnhaus(b1, b2)
        assert 2 * ramification_square(data) == data.b**2 - 2 * data.c

    @settings(max_examples=1000)
    @given(m=degrees, n=degrees)
    def test_decomposable_matches_branch_data(self, m, n):
        data = decomposable_invariants(m, n)
        assert data == branch_invariants(2 * (m + n), 3 * m * n)
        assert data == decomposable_invariants(n, m)


class TestBundleIdentities:
    """Twisting identities on P^1 x P^1."""

    @settings(max_examples=1000)
    @given(a=coords, b=coords, c2=coords, x=coords, y=coords)
    def test_bogomolov_twist_invariant(self, a, b, c2, x, y):
        e = RankTwoBundle(QUADRIC, QUADRIC.divisor(a, b), c2)
        twisted = twist(e, QUADRIC.divisor(x, y))
        assert bogomolov(twisted).discriminant == bogomolov(e).discriminant

    @settings(max_examples=1000)
    @given(a=coords, b=coords, c2=coords, x1=coords, y1=coords, x2=coords, y2=coords)
    def test_twist_composition(self, a, b, c2, x1, y1, x2, y2):
        e = RankTwoBundle(QUADRIC, QUADRIC.divisor(a, b), c2)
        d1, d2 = QUADRIC.divisor(x1, y1), QUADRIC.divisor(x2, y2)
        assert twist(twist(e, d1), d2) == twist(e, d1 + d2)


class TestIntersectionPairing:
    """The pairing is a symmetric bilinear form on every built-in model."""

    @pytest.mark.parametrize("model", MODELS, ids=lambda m: m.name)
    @settings(max_examples=300)
    @given(data=st.data(), k=coords)
    def test_symmetric_bilinear(self, model, data, k):
        d1, d2, d3 = (data.draw(divisors_on(model)) for _ in range(3))
        assert intersect(model, d1, d2) == intersect(model, d2, d1)
        assert intersect(model, d1 + d2, d3) == (
            intersect(model, d1, d3) + intersect(model, d2, d3)
        )
        assert intersect(model, k * d1, d2) == k * intersect(model, d1, d2)

    @settings(max_examples=1000)
    @given(m=divisors_on(QUADRIC), n=divisors_on(QUADRIC))
    def test_decomposable_chern_identity(self, m, n):
        e = RankTwoBundle.split(QUADRIC, m, n)
        expected = (
            self_intersection(QUADRIC, m)
            + intersect(QUADRIC, m, n)
            + self_intersection(QUADRIC, n)
        )
        assert e.c1_squared - e.c2 == expected

    @settings(max_examples=1000)
    @given(m=degrees, n=degrees)
    def test_decomposable_tschirnhaus_identity(self, m, n):
        data = decomposable_invariants(m, n)
        assert data.b1**2 - data.b2 == m * m + m * n + n * n


class TestPlaneCurveGenus:
    """Sectional genus of a plane curve of degree a."""

    @pytest.mark.parametrize("a,g", [(1, 0), (2, 0), (3, 1), (4, 3), (5, 6), (6, 10)])
    def test_small_degrees(self, a, g):
        assert sectional_genus(PLANE, PLANE.divisor(a)) == g

    @settings(max_examples=200)
    @given(a=st.integers(min_value=1, max_value=200))
    def test_formula(self, a):
        assert sectional_genus(PLANE, PLANE.divisor(a)) == (a - 1) * (a - 2) // 2


class TestScrollDegree:
    """Degree of a scroll over P^1 against its fibre dimension and splitting."""

    @settings(max_examples=1000)
    @given(s=scrolls())
    def test_degree_at_least_n(self, s):
        d, h0 = degree_over_P1(s)
        assert d >= s.n
        assert (d == s.n) == (s.alpha == 0 and s.b == 1)
        assert h0 == s.n + d

    @settings(max_examples=1000)
    @given(s=scrolls(), data=st.data())
    def test_monotone(self, s, data):
        d, _ = degree_over_P1(s)
        wider = ScrollOverCurve(s.alphas, s.b + 1, s.n)
        assert degree_over_P1(wider)[0] > d
        i = data.draw(st.integers(min_value=0, max_value=s.n - 2))
        bumped = list(s.alphas)
        bumped[i] += 1
        raised = ScrollOverCurve(tuple(sorted(bumped)), s.b, s.n)
        assert degree_over_P1(raised)[0] > d


class TestAmpleSplittings:
    """Ample splittings of a rank-2 bundle on P^1."""

    @pytest.mark.parametrize("d", range(-3, 13))
    def test_empty_iff_degree_below_two(self, d):
        pairs = ample_split_rank2_on_P1(d)
        assert (pairs == []) == (d < 2)
        for a1, a2 in pairs:
            assert a1 >= a2 >= 1
            assert a1 + a2 == d
        assert len(set(pairs)) == len(pairs) == max(d // 2, 0)
