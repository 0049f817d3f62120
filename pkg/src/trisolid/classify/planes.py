"""
trisolid.classify.planes - Triple solids that are scrolls over P^2.

A general hyperplane section S of Y is a triple plane whose minimal reduction
is (P^2, O(a)). The branch data (b, c) of S is then confined to the twelve
cases of the enumeration below, and a filter cascade leaves only the obvious
case and the candidate c1(E) = O(4), s = 13, b = 10, c = 21; the candidate is
finally killed by the Schwarzenberger parity condition on P^3.

Filters:
    b>=10    sectional genus bound (the obvious case is exempt)
    clebsch  g = (a-1)(a-2)/2 for the degree a of c1(E)
    hcube    c1(E)^2 - c2(E) = a^2 - s = 3
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from math import gcd
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from trisolid.bundles import RankTwoBundle, bogomolov, twist
from trisolid.errors import InfeasibleConditionsError, InvalidInputError
from trisolid.intersection import (
    P2xP2,
    SchubertClass,
    projective_plane,
    schubert_surface_product,
)
from trisolid.scroll import (
    FormalClass,
    PolarizedData,
    ScrollOverSurface,
    canonical_of_scroll,
    conic_fibration_data,
    delta_genus,
    plane_sections,
    ramification_of_triple_solid,
)
from trisolid.tripleplane import (
    GAMMA_CENTRE,
    GAMMA_RADIUS_SQUARED,
    branch_invariants,
    cusp_bounds,
    decomposable_invariants,
    from_tschirnhaus,
    gamma_integral_points,
    gamma_search_box,
    on_gamma,
    ramification_square,
    rational_blowup_count,
)

from .core import (
    CaseRecord,
    FilterOutcome,
    Provenance,
    ReportBuilder,
    VerdictReport,
    VerificationContext,
    verifier,
)
from .surfaces import candidate_bundle, hcube, obvious_bundle

logger = logging.getLogger(__name__)

B_AT_LEAST_10 = "b>=10"
CLEBSCH = "clebsch"
HCUBE = "hcube"
DEFAULT_FILTER_ORDER: Tuple[str, ...] = (B_AT_LEAST_10, CLEBSCH, HCUBE)

# s <= 16 since D = 129 - 8s must be non-negative
MAX_S = 16


# -----------------------------------------------------------------------------
# Table 1
# -----------------------------------------------------------------------------


def enumerate_table1() -> List[CaseRecord]:
    """
    Every (s, b, c) with b^2 - 30b + 8(12 + s) = 0 and p_g(S) = 0.

    b = 15 +- sqrt(129 - 8s) and c = 3b(b-6)/8 + 6; sorted by b.
    """
    rows = []
    for s in range(1, MAX_S + 1):
        root, exact = sp.integer_nthroot(129 - 8 * s, 2)
        if not exact:
            logger.debug("table1: s=%d, 129 - 8s is not a square", s)
            continue
        for b in sorted({15 - int(root), 15 + int(root)}):
            c = sp.Rational(3 * b * (b - 6), 8) + 6
            rows.append((b, s, int(c)))
    rows.sort()
    return [CaseRecord(id=i, s=s, b=b, c=c) for i, (b, s, c) in enumerate(rows, start=1)]


def is_obvious_case(record: CaseRecord) -> bool:
    return record.s == 1 and record.b == 4


def clebsch_degree(g: int) -> Optional[int]:
    """The degree a of a smooth plane curve of genus g, if one exists (a >= 2)."""
    root, exact = sp.integer_nthroot(1 + 8 * g, 2)
    if not exact:
        return None
    return (3 + int(root)) // 2


def _b_filter(record: CaseRecord) -> FilterOutcome:
    g = (record.b - 4) // 2
    passed = is_obvious_case(record) or record.b >= 10
    return FilterOutcome(
        B_AT_LEAST_10,
        passed,
        "b >= 10, equality implying g = 3",
        (("b", record.b), ("g", g)),
    )


def _clebsch_filter(record: CaseRecord) -> FilterOutcome:
    g = (record.b - 4) // 2
    a = clebsch_degree(g)
    passed = a is not None and (a >= 3 or is_obvious_case(record))
    return FilterOutcome(
        CLEBSCH,
        passed,
        "g = (b-4)/2 = (a-1)(a-2)/2",
        (("g", g), ("a", a)),
    )


def _hcube_filter(record: CaseRecord) -> FilterOutcome:
    a = clebsch_degree((record.b - 4) // 2)
    value = None if a is None else a * a - record.s
    return FilterOutcome(
        HCUBE,
        value == 3,
        "c1(E)^2 - c2(E) = a^2 - s = 3",
        (("a", a), ("a^2-s", value)),
    )


_FILTERS = {
    B_AT_LEAST_10: _b_filter,
    CLEBSCH: _clebsch_filter,
    HCUBE: _hcube_filter,
}


@dataclass(frozen=True)
class FilteredTable:
    records: Tuple[CaseRecord, ...]
    survivors: Tuple[int, ...]


def filter_table1(
    records: Sequence[CaseRecord], order: Sequence[str] = DEFAULT_FILTER_ORDER
) -> FilteredTable:
    """
    Annotate every record with every filter, in `order`.

    All filters are evaluated on every case so each record carries its full
    set of witnesses; `first_failure` follows `order`.
    """
    if sorted(order) != sorted(_FILTERS):
        raise InvalidInputError(
            "filter_table1", f"order must be a permutation of {sorted(_FILTERS)}"
        )
    annotated = tuple(
        replace(r, filters=tuple(_FILTERS[name](r) for name in order)) for r in records
    )
    for r in annotated:
        if not r.survives:
            logger.debug("table1: case %d fails %s", r.id, r.first_failure)
    return FilteredTable(annotated, tuple(r.id for r in annotated if r.survives))


# -----------------------------------------------------------------------------
# Vector bundles on P^3 and the Grassmannian
# -----------------------------------------------------------------------------


def schwarzenberger(c1_mult: int, c2_mult: int) -> bool:
    """Parity condition c1 c2 = 0 mod 2 for rank-2 bundles on P^3."""
    return (c1_mult * c2_mult) % 2 == 0


@dataclass(frozen=True, slots=True)
class GrassmannResiduals:
    """
    Both sides of the two relations holding when psi: X -> G(1,3) embeds.

    formule clef: 9 + s^2 = 3(3+s) + 4(2g-2) + 2K_X^2 - 12 chi
    final: (s-2)(s-3) = -2 b1^2 - 2 b1 + 6 b2
    """

    factorizations: Tuple[Tuple[int, Tuple[int, int]], ...]
    clef_lhs: int
    clef_rhs: int
    final_lhs: int
    final_rhs: int

    @property
    def clef_residual(self) -> int:
        return self.clef_lhs - self.clef_rhs

    @property
    def final_residual(self) -> int:
        return self.final_lhs - self.final_rhs


def psi_factorizations(s: int) -> List[Tuple[int, Tuple[int, int]]]:
    """(deg psi, (alpha, beta)) with 3 = alpha deg psi and s = beta deg psi."""
    if s < 1:
        raise InvalidInputError("psi_factorizations", f"s={s} must be >= 1")
    return [(d, (3 // d, s // d)) for d in sp.divisors(gcd(3, s))]


def grassmann_residuals(
    s: int, b1: int, b2: int, g: int, ksq: int, chi: int
) -> GrassmannResiduals:
    """`ksq` and `chi` are K_X^2 and chi(O_X) of the base surface."""
    return GrassmannResiduals(
        factorizations=tuple(psi_factorizations(s)),
        clef_lhs=9 + s * s,
        clef_rhs=3 * (3 + s) + 4 * (2 * g - 2) + 2 * ksq - 12 * chi,
        final_lhs=(s - 2) * (s - 3),
        final_rhs=-2 * b1 * b1 - 2 * b1 + 6 * b2,
    )


def _grassmann_steps(
    report: ReportBuilder,
    label: str,
    res: GrassmannResiduals,
    s: int,
    expected_residual: int,
) -> None:
    for degree, (alpha, beta) in res.factorizations:
        report.check(
            f"{label}: deg psi = {degree}: c2(E) = beta deg psi",
            degree * schubert_surface_product(alpha, beta, SchubertClass.OMEGA_12),
            s,
            Provenance.QUOTED,
        )
        report.check(
            f"{label}: deg psi = {degree}: c1(E)^2 = (alpha + beta) deg psi",
            degree
            * schubert_surface_product(alpha, beta, SchubertClass.HYPERPLANE_SQUARED),
            3 + s,
            Provenance.QUOTED,
        )
    provenance = Provenance.DERIVED if expected_residual else Provenance.QUOTED
    report.check(
        f"{label}: formule clef residual", res.clef_residual, expected_residual, provenance
    )
    report.check(
        f"{label}: final relation residual",
        res.final_residual,
        expected_residual,
        provenance,
    )


def grassmann_relations(
    s: int, b1: int, b2: int, g: int, ksq: int, chi: int
) -> VerdictReport:
    """Both displays must balance when psi is an embedding."""
    res = grassmann_residuals(s, b1, b2, g, ksq, chi)
    report = ReportBuilder("grassmann", "Congruence of lines defined by E")
    _grassmann_steps(report, f"s={s}", res, s, 0)
    if gcd(3, s) == 1:
        report.note(f"s={s} is prime to 3: psi is birational, W has bidegree (3, {s})")
    return report.build()


def linear_system_conditions(h0_detE: int, s: int) -> int:
    """
    Independent conditions t imposed on |det E| by the s points of Z.

    h0(det E (x) J_Z) = h0(det E) - t = h0(E) - 1 = 3.
    """
    if h0_detE < 3:
        raise InvalidInputError("linear_system_conditions", f"h0(det E)={h0_detE} < 3")
    t = h0_detE - 3
    if t > s:
        raise InfeasibleConditionsError(t, s)
    return t


def bidegree_product(*multidegrees: Tuple[int, int]) -> int:
    """Intersection of four divisors O(a, b) on P^2 x P^2."""
    return P2xP2.intersect_divisors(*multidegrees)


def remark_final_degree() -> int:
    """
    Degree of the triple plane S -> P^2_2 for S in |L + 2h| on P(T_P2).

    Y is in |O(1,1)| on P^2 x P^2, S = O(3,1)|_Y, and the map is given by O(0,1).
    """
    return bidegree_product((3, 1), (1, 1), (0, 1), (0, 1))


# -----------------------------------------------------------------------------
# Reports
# -----------------------------------------------------------------------------


def table1_report() -> VerdictReport:
    report = ReportBuilder("table1-filter", "Scrolls over P^2: the twelve cases and the cascade")
    records = enumerate_table1()
    report.check("number of cases", len(records), 12, Provenance.QUOTED)
    report.check(
        "s by case",
        [r.s for r in records],
        [1, 6, 10, 13, 15, 16, 16, 15, 13, 10, 6, 1],
        Provenance.QUOTED,
    )
    report.check("b by case", [r.b for r in records], list(range(4, 27, 2)), Provenance.QUOTED)
    report.check(
        "c by case",
        [r.c for r in records],
        [3, 6, 12, 21, 33, 48, 66, 87, 111, 138, 168, 201],
        Provenance.QUOTED,
    )
    report.check(
        "b^2 - 30b + 8(12 + s) = 0 on every case",
        all(r.b**2 - 30 * r.b + 8 * (12 + r.s) == 0 for r in records),
        True,
        Provenance.DERIVED,
    )
    data = [branch_invariants(r.b, r.c) for r in records]
    report.check("p_g on every case", {d.pg for d in data}, {0}, Provenance.QUOTED)
    report.check(
        "3e(S) - K_S^2 = 4s on every case",
        all(3 * d.euler - d.ksq == 4 * r.s for d, r in zip(data, records)),
        True,
        Provenance.QUOTED,
    )

    table = filter_table1(records)
    report.check("survivors", table.survivors, [1, 4], Provenance.QUOTED)
    first = {r.id: r.first_failure for r in table.records if not r.survives}
    report.check(
        "first failing filter",
        first,
        {
            2: B_AT_LEAST_10,
            3: B_AT_LEAST_10,
            5: CLEBSCH,
            6: CLEBSCH,
            7: HCUBE,
            8: CLEBSCH,
            9: CLEBSCH,
            10: CLEBSCH,
            11: HCUBE,
            12: CLEBSCH,
        },
        Provenance.QUOTED,
    )
    by_id = {r.id: r for r in table.records}
    for case, a, value in ((7, 5, 9), (11, 6, 30), (4, 4, 3)):
        outcome = by_id[case].filter(HCUBE)
        report.check(f"case {case}: (a, a^2 - s)", (outcome.get("a"), outcome.get("a^2-s")), (a, value), Provenance.QUOTED)
    report.check("case 2 fails only b >= 10", [f.name for f in by_id[2].filters if not f.passed], [B_AT_LEAST_10], Provenance.DERIVED)
    report.check("case 9: g, no integer a", (by_id[9].filter(CLEBSCH).get("g"), by_id[9].filter(CLEBSCH).get("a")), (8, None), Provenance.DERIVED)

    swapped = filter_table1(records, order=(B_AT_LEAST_10, HCUBE, CLEBSCH))
    report.check("survivors with hcube before clebsch", swapped.survivors, [1, 4], Provenance.DERIVED)
    return report.build()


def obvious_case_report() -> VerdictReport:
    report = ReportBuilder("obvious-case", "(P^2 x P^1, O(1,1)) and its hyperplane section")
    data = from_tschirnhaus(-2, 1)
    report.check(
        "(b, c, K^2, e, p_g) for (b1, b2) = (-2, 1)",
        (data.b, data.c, data.ksq, data.euler, data.pg),
        (4, 3, 8, 4, 0),
        Provenance.QUOTED,
    )
    report.check("sectional genus", data.g, 0, Provenance.QUOTED)
    report.check(
        "T = O(-1) + O(-1)",
        decomposable_invariants(1, 1).as_dict(),
        data.as_dict(),
        Provenance.DERIVED,
    )
    report.check("K_S^2 = K_P2^2 - s", 9 - 1, data.ksq, Provenance.DERIVED)
    report.check("e(S) = e(P2) + s", 3 + 1, data.euler, Provenance.DERIVED)
    report.check("R_S^2 = b^2/2 - c", ramification_square(data), data.b**2 // 2 - data.c, Provenance.DERIVED)
    report.check("2e - K^2 = 3(s - 1)", 2 * data.euler - data.ksq, 0, Provenance.DERIVED)
    report.check(
        "Delta-genus of (3, 3, 6)",
        delta_genus(PolarizedData(dim=3, degree=3, h0=6)),
        0,
        Provenance.QUOTED,
    )

    bundle = obvious_bundle()
    report.check("H^3", hcube(bundle), 3, Provenance.TRIVIAL)
    report.check("Bogomolov discriminant", bogomolov(bundle).discriminant, 0, Provenance.QUOTED)
    y = ScrollOverSurface(bundle)
    h = y.base.generator("h")
    report.check(
        "K_Y = -2H - pi^*h",
        canonical_of_scroll(y) == FormalClass(-2, -h),
        True,
        Provenance.DERIVED,
    )
    report.check(
        "R = 2H - pi^*h",
        ramification_of_triple_solid(y) == FormalClass(2, -h),
        True,
        Provenance.DERIVED,
    )

    bounds = cusp_bounds(data.b, 1)
    report.check("cusp lower bound b^2/6", bounds.lower_strict, sp.Rational(8, 3), Provenance.DERIVED)
    report.check("cusp upper bound", bounds.upper, 3, Provenance.DERIVED)
    report.check("c = 3 sits on the upper bound", bounds.admits(3) and bounds.upper == 3, True, Provenance.DERIVED)
    return report.build()


def candidate_case_report() -> VerdictReport:
    report = ReportBuilder("candidate-case", "c1(E) = O(4), s = 13, b = 10, c = 21")
    data = branch_invariants(10, 21)
    report.check(
        "(g, K_S^2, e(S), p_g)",
        (data.g, data.ksq, data.euler, data.pg),
        (3, -4, 16, 0),
        Provenance.QUOTED,
    )
    report.check("(b1, b2)", (data.b1, data.b2), (-5, 7), Provenance.QUOTED)
    report.check("K_S^2 = K_P2^2 - s", 9 - 13, data.ksq, Provenance.DERIVED)
    report.check("e(S) = e(P2) + s", 3 + 13, data.euler, Provenance.DERIVED)
    report.check("2e - K^2 = 3(s - 1)", 2 * data.euler - data.ksq, 36, Provenance.QUOTED)
    report.check("blow-ups down to F_1", rational_blowup_count(data), 12, Provenance.DERIVED)
    report.check("R_S^2 = b^2/2 - c", ramification_square(data), 29, Provenance.DERIVED)

    bounds = cusp_bounds(10, 13)
    report.check("lower bound", bounds.lower_strict, sp.Rational(50, 3), Provenance.DERIVED)
    report.check("upper terms", bounds.upper_terms, (21, 21), Provenance.DERIVED)
    report.check("21 <= 21 with equality", bounds.admits(21) and bounds.upper == 21, True, Provenance.QUOTED)
    refined = cusp_bounds(10, 13, rational_non_p2=True)
    report.check("refined bound for rational S not over P^2", refined.refined, sp.Rational(102, 5), Provenance.DERIVED)
    report.check("c = 21 violates the refined bound", refined.admits(21), False, Provenance.DERIVED)

    bundle = candidate_bundle()
    report.check("H^3 = 16 - 13", hcube(bundle), 3, Provenance.QUOTED)
    c1f, b = conic_fibration_data(ScrollOverSurface(bundle))
    report.check("(c1(F), B)", (c1f, b), ([15], [-10]), Provenance.DERIVED)
    h0 = plane_sections(4)
    report.check("h0(det E) = h0(O(4))", h0, 15, Provenance.QUOTED)
    report.check("independent conditions t", linear_system_conditions(h0, 13), 12, Provenance.QUOTED)

    tangent_twist = twist(RankTwoBundle.tangent_plane(), projective_plane().divisor(-4))
    report.check("T = T_P2(-4): (c1, c2)", (tangent_twist.c1, tangent_twist.c2), ([-5], 7), Provenance.QUOTED)
    report.check(
        "from_tschirnhaus(-5, 7) agrees",
        from_tschirnhaus(-5, 7).as_dict(),
        data.as_dict(),
        Provenance.DERIVED,
    )
    return report.build()


def schwarzenberger_report() -> VerdictReport:
    report = ReportBuilder("schwarzenberger", "No rank-2 bundle on P^3 restricts to T")
    data = branch_invariants(10, 21)
    report.check("Chern classes of the extension to P^3", (data.b1, data.b2), (-5, 7), Provenance.QUOTED)
    report.check("(-5) * 7 even", schwarzenberger(data.b1, data.b2), False, Provenance.QUOTED)
    report.check("obvious case (-2) * 1 even", schwarzenberger(-2, 1), True, Provenance.DERIVED)
    report.check("(0, 7)", schwarzenberger(0, 7), True, Provenance.TRIVIAL)
    report.cite("c1 c2 even for rank-2 bundles on P^3", "Okonek-Schneider-Spindler, p. 113")
    report.note("the candidate is excluded: only the obvious case remains over P^2")
    return report.build()


def grassmann_report() -> VerdictReport:
    report = ReportBuilder("grassmann", "Congruence of lines defined by E")
    obvious = grassmann_residuals(s=1, b1=-2, b2=1, g=0, ksq=9, chi=1)
    report.check("obvious case: formule clef sides", (obvious.clef_lhs, obvious.clef_rhs), (10, 10), Provenance.QUOTED)
    report.check("obvious case: final relation sides", (obvious.final_lhs, obvious.final_rhs), (2, 2), Provenance.DERIVED)
    report.check("obvious case: factorizations", obvious.factorizations, [(1, (3, 1))], Provenance.DERIVED)
    _grassmann_steps(report, "obvious", obvious, 1, 0)

    candidate = grassmann_residuals(s=13, b1=-5, b2=7, g=3, ksq=9, chi=1)
    report.check("candidate: s prime to 3, deg psi = 1", candidate.factorizations, [(1, (3, 13))], Provenance.QUOTED)
    _grassmann_steps(report, "candidate", candidate, 13, 108)
    report.check("s = 3: two factorizations", psi_factorizations(3), [(1, (3, 3)), (3, (1, 1))], Provenance.DERIVED)
    report.note("the remark's value 10 matches the formule clef; the final relation balances at 2")
    report.note("candidate residuals are nonzero: psi cannot be an embedding for that data")
    return report.build()


def linear_conditions_report() -> VerdictReport:
    report = ReportBuilder("linear-conditions", "Plane quartics through 13 points")
    report.check("(15, 13)", linear_system_conditions(15, 13), 12, Provenance.QUOTED)
    report.check("(6, 3) at the boundary t = s", linear_system_conditions(6, 3), 3, Provenance.TRIVIAL)
    try:
        linear_system_conditions(15, 11)
        infeasible = False
    except InfeasibleConditionsError:
        infeasible = True
    report.check("(15, 11) is infeasible", infeasible, True, Provenance.DERIVED)
    return report.build()


def remark_final_report() -> VerdictReport:
    report = ReportBuilder("remark-final", "A triple plane on P(T_P2) with M != L")
    report.check("S . O(0,1)^2 on Y", remark_final_degree(), 3, Provenance.QUOTED)
    report.check("O(1,1)^2 . O(0,1)^2", bidegree_product((1, 1), (1, 1), (0, 1), (0, 1)), 1, Provenance.DERIVED)
    report.check("O(1,0)^3 vanishes", bidegree_product((1, 0), (1, 0), (1, 0), (0, 1)), 0, Provenance.TRIVIAL)
    report.check("O(1,0)^2 . O(0,1)^2", bidegree_product((1, 0), (1, 0), (0, 1), (0, 1)), 1, Provenance.TRIVIAL)
    return report.build()


def gamma_points_report() -> VerdictReport:
    report = ReportBuilder("gamma-points", "Decomposable Tschirnhaus bundles with p_g = 0")
    m, n = sp.symbols("m n", integer=True)
    circle = m**2 + n**2 - 3 * m - 3 * n + 4
    report.check(
        "circle centre and radius",
        sp.expand(circle - ((m - GAMMA_CENTRE) ** 2 + (n - GAMMA_CENTRE) ** 2 - GAMMA_RADIUS_SQUARED)),
        0,
        Provenance.DERIVED,
    )
    report.check("search box from (2x - 3)^2 <= 2", list(gamma_search_box()), [1, 2], Provenance.DERIVED)
    points = gamma_integral_points()
    report.check("integral points", points, {(1, 1), (1, 2), (2, 1), (2, 2)}, Provenance.QUOTED)
    report.check(
        "p_g = 0 exactly on the circle",
        all((decomposable_invariants(a, b).pg == 0) == on_gamma(a, b) for a in range(1, 6) for b in range(1, 6)),
        True,
        Provenance.DERIVED,
    )
    report.check("largest b = 2(m + n)", max(2 * (a + b) for a, b in points), 8, Provenance.QUOTED)
    report.check("every point has b < 10", all(2 * (a + b) < 10 for a, b in points), True, Provenance.QUOTED)
    return report.build()


def cusp_bounds_report() -> VerdictReport:
    report = ReportBuilder("cusp-bounds", "Cusp bounds on the twelve cases")
    records = enumerate_table1()
    lower_fails = [r.id for r in records if not r.c > cusp_bounds(r.b, r.s).lower_strict]
    report.check("cases failing c > b^2/6", lower_fails, [2], Provenance.DERIVED)
    report.check(
        "upper bound met with equality on every case",
        all(cusp_bounds(r.b, r.s).upper == r.c for r in records),
        True,
        Provenance.DERIVED,
    )
    bounds = cusp_bounds(10, 13)
    report.check("(b, s) = (10, 13): lower", bounds.lower_strict, sp.Rational(50, 3), Provenance.QUOTED)
    report.check("(b, s) = (10, 13): upper", bounds.upper, 21, Provenance.QUOTED)
    return report.build()


# -----------------------------------------------------------------------------
# Registration
# -----------------------------------------------------------------------------


@verifier(name="obvious-case", order=140, doc="invariants of the obvious case")
def _obvious_case(ctx: VerificationContext) -> VerdictReport:
    return obvious_case_report()


@verifier(name="linear-conditions", order=160, doc="13 points imposing 12 conditions on quartics")
def _linear_conditions(ctx: VerificationContext) -> VerdictReport:
    return linear_conditions_report()


@verifier(name="gamma-points", order=170, doc="integral points of the p_g = 0 circle")
def _gamma_points(ctx: VerificationContext) -> VerdictReport:
    return gamma_points_report()


@verifier(name="cusp-bounds", order=180, doc="b^2/6 < c <= min of the two upper bounds")
def _cusp_bounds(ctx: VerificationContext) -> VerdictReport:
    return cusp_bounds_report()


@verifier(name="grassmann", order=190, doc="formule clef and the final relation")
def _grassmann(ctx: VerificationContext) -> VerdictReport:
    return grassmann_report()


@verifier(name="table1-filter", order=200, doc="the twelve cases over P^2 and the filter cascade")
def _table1_filter(ctx: VerificationContext) -> VerdictReport:
    return table1_report()


@verifier(name="candidate-case", order=210, doc="invariants of c1(E) = O(4), s = 13")
def _candidate_case(ctx: VerificationContext) -> VerdictReport:
    return candidate_case_report()


@verifier(name="schwarzenberger", order=220, doc="parity obstruction for (-5, 7) on P^3")
def _schwarzenberger(ctx: VerificationContext) -> VerdictReport:
    return schwarzenberger_report()


@verifier(name="remark-final", order=230, doc="degree of a triple plane on P(T_P2)")
def _remark_final(ctx: VerificationContext) -> VerdictReport:
    return remark_final_report()
