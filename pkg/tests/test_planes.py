"""
Tests for trisolid.classify.planes: the cases over P^2 and P^3 parity.
"""

import pytest

from trisolid.classify import (
    DEFAULT_FILTER_ORDER,
    enumerate_table1,
    filter_table1,
    grassmann_relations,
    grassmann_residuals,
    linear_system_conditions,
    remark_final_degree,
    schwarzenberger,
)
from trisolid.classify.planes import (
    B_AT_LEAST_10,
    CLEBSCH,
    HCUBE,
    bidegree_product,
    clebsch_degree,
    is_obvious_case,
    psi_factorizations,
)
from trisolid.errors import InfeasibleConditionsError, InvalidInputError
from trisolid.tripleplane import branch_invariants, cusp_bounds

TABLE1_S = [1, 6, 10, 13, 15, 16, 16, 15, 13, 10, 6, 1]
TABLE1_C = [3, 6, 12, 21, 33, 48, 66, 87, 111, 138, 168, 201]


@pytest.fixture
def table():
    """Table 1 filtered in the default order."""
    return filter_table1(enumerate_table1())


class TestEnumeration:
    """Tests for the twelve cases over P^2."""

    def test_rows(self):
        records = enumerate_table1()
        assert [r.id for r in records] == list(range(1, 13))
        assert [r.s for r in records] == TABLE1_S
        assert [r.b for r in records] == list(range(4, 27, 2))
        assert [r.c for r in records] == TABLE1_C

    def test_quadratic_relation(self):
        for r in enumerate_table1():
            assert r.b**2 - 30 * r.b + 8 * (12 + r.s) == 0

    def test_pg_vanishes(self):
        for r in enumerate_table1():
            data = branch_invariants(r.b, r.c)
            assert data.pg == 0
            assert 3 * data.euler - data.ksq == 4 * r.s

    def test_obvious_row(self):
        first = enumerate_table1()[0]
        assert is_obvious_case(first)
        assert not is_obvious_case(enumerate_table1()[-1])


class TestFilters:
    """Tests for the filter cascade."""

    def test_survivors(self, table):
        assert table.survivors == (1, 4)

    def test_first_failures(self, table):
        first = {r.id: r.first_failure for r in table.records}
        assert first == {
            1: None,
            2: B_AT_LEAST_10,
            3: B_AT_LEAST_10,
            4: None,
            5: CLEBSCH,
            6: CLEBSCH,
            7: HCUBE,
            8: CLEBSCH,
            9: CLEBSCH,
            10: CLEBSCH,
            11: HCUBE,
            12: CLEBSCH,
        }

    def test_hcube_witnesses(self, table):
        by_id = {r.id: r for r in table.records}
        assert by_id[7].filter(HCUBE).get("a") == 5
        assert by_id[7].filter(HCUBE).get("a^2-s") == 9
        assert by_id[11].filter(HCUBE).get("a") == 6
        assert by_id[11].filter(HCUBE).get("a^2-s") == 30

    def test_every_filter_evaluated(self, table):
        for r in table.records:
            assert [f.name for f in r.filters] == list(DEFAULT_FILTER_ORDER)

    def test_case_two_only_fails_genus_bound(self, table):
        case2 = table.records[1]
        assert [f.name for f in case2.filters if not f.passed] == [B_AT_LEAST_10]

    def test_order_does_not_change_survivors(self):
        records = enumerate_table1()
        for order in (
            (HCUBE, CLEBSCH, B_AT_LEAST_10),
            (CLEBSCH, B_AT_LEAST_10, HCUBE),
        ):
            assert filter_table1(records, order).survivors == (1, 4)

    def test_order_changes_first_failure(self):
        swapped = filter_table1(enumerate_table1(), (HCUBE, CLEBSCH, B_AT_LEAST_10))
        assert swapped.records[2].first_failure == HCUBE
        assert swapped.records[4].first_failure == HCUBE
        assert swapped.records[1].first_failure == B_AT_LEAST_10

    def test_bad_order(self):
        with pytest.raises(InvalidInputError):
            filter_table1(enumerate_table1(), (HCUBE, CLEBSCH))

    def test_clebsch_degree(self):
        assert clebsch_degree(0) == 2
        assert clebsch_degree(1) == 3
        assert clebsch_degree(3) == 4
        assert clebsch_degree(2) is None


class TestCuspBoundsOnTable:
    """Tests for the cusp bounds on the enumerated cases."""

    def test_lower_bound_fails_only_on_case_two(self):
        failing = [
            r.id
            for r in enumerate_table1()
            if not r.c > cusp_bounds(r.b, r.s).lower_strict
        ]
        assert failing == [2]

    def test_upper_bound_is_attained(self):
        for r in enumerate_table1():
            assert cusp_bounds(r.b, r.s).upper == r.c


class TestGrassmann:
    """Tests for the congruence-of-lines relations."""

    def test_obvious_balances(self):
        res = grassmann_residuals(s=1, b1=-2, b2=1, g=0, ksq=9, chi=1)
        assert (res.clef_lhs, res.clef_rhs) == (10, 10)
        assert (res.final_lhs, res.final_rhs) == (2, 2)
        assert res.clef_residual == 0
        assert res.final_residual == 0

    def test_candidate_residuals(self):
        res = grassmann_residuals(s=13, b1=-5, b2=7, g=3, ksq=9, chi=1)
        assert res.clef_residual == 108
        assert res.final_residual == 108
        assert res.factorizations == ((1, (3, 13)),)

    def test_relations_report(self):
        assert grassmann_relations(s=1, b1=-2, b2=1, g=0, ksq=9, chi=1).overall
        report = grassmann_relations(s=13, b1=-5, b2=7, g=3, ksq=9, chi=1)
        assert not report.overall
        assert any("prime to 3" in note for note in report.notes)

    def test_factorizations(self):
        assert psi_factorizations(3) == [(1, (3, 3)), (3, (1, 1))]
        assert psi_factorizations(13) == [(1, (3, 13))]

    def test_factorizations_invalid(self):
        with pytest.raises(InvalidInputError):
            psi_factorizations(0)


class TestLinearConditions:
    """Tests for conditions imposed on |det E|."""

    def test_quartics_through_13_points(self):
        assert linear_system_conditions(15, 13) == 12

    def test_boundary(self):
        assert linear_system_conditions(6, 3) == 3

    def test_infeasible(self):
        with pytest.raises(InfeasibleConditionsError) as exc_info:
            linear_system_conditions(15, 11)
        assert (exc_info.value.t, exc_info.value.s) == (12, 11)

    def test_too_few_sections(self):
        with pytest.raises(InvalidInputError):
            linear_system_conditions(2, 5)


class TestParity:
    """Tests for the Schwarzenberger condition and the final remark."""

    def test_candidate_excluded(self):
        assert not schwarzenberger(-5, 7)

    def test_obvious_allowed(self):
        assert schwarzenberger(-2, 1)

    def test_remark_degree(self):
        assert remark_final_degree() == 3

    def test_bidegree_product(self):
        assert bidegree_product((1, 1), (1, 1), (0, 1), (0, 1)) == 1
