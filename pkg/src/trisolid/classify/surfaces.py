"""
trisolid.classify.surfaces - Triple solids that are scrolls over a surface.

Y = P_X(E) with E ample and spanned of rank 2, polarized by the tautological
class H with H^3 = c1(E)^2 - c2(E) = 3. The checks here cover stability,
the conic fibration given by the ramification divisor, the exclusions of
non-ample adjoint bundles, decomposable bundles and Fano threefolds, and the
sectional genus bound.
"""

from __future__ import annotations

import logging
from typing import List, Tuple

import sympy as sp

from trisolid.bundles import (
    RankTwoBundle,
    Stability,
    ample_split_rank2_on_P1,
    bogomolov,
    cokernel_of_line,
    twist,
)
from trisolid.errors import InvalidInputError
from trisolid.intersection import (
    canonical_class,
    hodge_index_numeric,
    intersect,
    projective_plane,
    quadric_surface,
    self_intersection,
)
from trisolid.scroll import (
    FormalClass,
    PolarizedData,
    ScrollOverSurface,
    canonical_of_scroll,
    conic_fibration_data,
    delta_genus,
    hyperplane_ascent_delta,
    plane_sections,
    ramification_of_triple_solid,
    sectional_genus,
)

from .core import (
    Provenance,
    ReportBuilder,
    VerdictReport,
    VerificationContext,
    verifier,
)

logger = logging.getLogger(__name__)


def hcube(e: RankTwoBundle) -> int:
    """H^3 = c1(E)^2 - c2(E) on P(E) by the Chern-Wu relation."""
    return e.c1_squared - e.c2


def obvious_bundle() -> RankTwoBundle:
    """O(1) + O(1) on P^2, the bundle of the Segre P^2 x P^1."""
    plane = projective_plane()
    h = plane.generator("h")
    return RankTwoBundle.split(plane, h, h)


def candidate_bundle() -> RankTwoBundle:
    """The only bundle left by the genus bound: c1 = 4h, c2 = 13 on P^2."""
    plane = projective_plane()
    return RankTwoBundle(plane, plane.divisor(4), 13, splitting_type=(2, 2))


# -----------------------------------------------------------------------------
# Stability and the conic fibration
# -----------------------------------------------------------------------------


def stability_report() -> VerdictReport:
    report = ReportBuilder("stability", "Bogomolov stability of E")
    c2 = sp.Symbol("c2", integer=True, positive=True)
    disc = sp.factor((3 + c2) - 4 * c2)
    report.check(
        "c1^2 - 4c2 with c1^2 = 3 + c2",
        sp.expand(disc - 3 * (1 - c2)),
        0,
        Provenance.QUOTED,
    )
    report.check(
        "discriminant vanishes only at c2",
        sp.solve(sp.Eq(disc, 0), c2),
        [1],
        Provenance.QUOTED,
    )

    obvious = bogomolov(obvious_bundle())
    report.check("obvious case: discriminant", obvious.discriminant, 0, Provenance.DERIVED)
    report.check(
        "obvious case: properly semistable",
        obvious.verdict,
        Stability.SEMISTABLE_BOUNDARY,
        Provenance.QUOTED,
    )
    candidate = bogomolov(candidate_bundle())
    report.check("(4h, 13): discriminant 16 - 52", candidate.discriminant, -36, Provenance.DERIVED)
    report.check("(4h, 13): stable side", candidate.verdict, Stability.STABLE_SIDE, Provenance.DERIVED)

    report.cite("c2 = 1 only for (P^2, O(1) + O(1))", "Lanteri-Sommese rigidity")
    report.cite("c2 = 2 forces E decomposable or X irregular", "Noma, Theorem 6.1")
    report.note("outside the obvious case c2 >= 3")
    return report.build()


def conic_fibration_report() -> VerdictReport:
    report = ReportBuilder("conic-fibration", "Y as a conic bundle over X with empty discriminant")
    for label, bundle, c1f_expected, b_expected in (
        ("obvious", obvious_bundle(), 3, -2),
        ("(4h, 13)", candidate_bundle(), 15, -10),
    ):
        y = ScrollOverSurface(bundle)
        plane = y.base
        adj = y.adjoint
        r_minus_k = ramification_of_triple_solid(y) - canonical_of_scroll(y)
        report.check(
            f"{label}: R = K_Y + 4H",
            (r_minus_k - FormalClass(4, plane.zero())).is_zero(),
            True,
            Provenance.QUOTED,
        )
        c1f, b = conic_fibration_data(y)
        report.check(f"{label}: c1(F)", c1f, plane.divisor(c1f_expected), Provenance.DERIVED)
        report.check(
            f"{label}: c1(F) = 3(K_X + 2 det E)",
            c1f,
            3 * (canonical_class(plane) + 2 * bundle.c1),
            Provenance.QUOTED,
        )
        report.check(f"{label}: B", b, plane.divisor(b_expected), Provenance.DERIVED)
        report.check(f"{label}: 2 c1(F) + 3B", (2 * c1f + 3 * b).is_zero(), True, Provenance.QUOTED)
        report.check(
            f"{label}: B = -2(K_X + 2 det E)",
            b,
            -2 * (adj + bundle.c1),
            Provenance.QUOTED,
        )
    return report.build()


# -----------------------------------------------------------------------------
# Non-ample adjoint bundles
# -----------------------------------------------------------------------------


def ruled_case_chern() -> Tuple[sp.Expr, sp.Expr]:
    """
    (c1^2, c2) for E = xi (x) p^*G on X = P_C(V), with v = deg V, gamma = deg G.

    xi^2 = v, xi.f = 1, f^2 = 0 and c1(E) = 2 xi + gamma f.
    """
    v, gamma = sp.symbols("v gamma", integer=True)
    form = sp.Matrix([[v, 1], [1, 0]])
    c1 = sp.Matrix([2, gamma])
    c1_sq = sp.expand((c1.T * form * c1)[0])
    c2 = v + gamma
    return c1_sq, c2


def prop_A_exclusions() -> VerdictReport:
    """Every pair with K_X + det E not ample is the obvious case or fails H^3 = 3."""
    report = ReportBuilder("prop-a", "Ampleness of K_X + det E")
    plane, quadric = projective_plane(), quadric_surface()
    h = plane.generator("h")
    cases = (
        ("(b) (P^2, O(2) + O(1))", RankTwoBundle.split(plane, 2 * h, h), 7),
        ("(c) (P^2, T)", RankTwoBundle.tangent_plane(), 6),
        ("(d) (Q^2, O(1) + O(1))", RankTwoBundle.split(quadric, quadric.divisor(1, 1), quadric.divisor(1, 1)), 6),
    )
    for label, bundle, expected in cases:
        report.check(f"{label}: c1^2 - c2", hcube(bundle), expected, Provenance.QUOTED)
        report.check(f"{label}: contradicts H^3 = 3", hcube(bundle) != 3, True, Provenance.DERIVED)

    c1_sq, c2 = ruled_case_chern()
    v, gamma = sp.symbols("v gamma", integer=True)
    report.check("(a): c1^2 = 4(v + gamma)", sp.expand(c1_sq - 4 * (v + gamma)), 0, Provenance.QUOTED)
    (gamma_sol,) = sp.solve(sp.Eq(c1_sq - c2, 3), gamma)
    report.check("(a): H^3 = 3 gives v + gamma", sp.expand(v + gamma_sol), 1, Provenance.QUOTED)
    report.check("(a): hence c2", sp.expand(c2.subs(gamma, gamma_sol)), 1, Provenance.DERIVED)
    report.cite("c2 = 1 forces the obvious case", "Lanteri-Sommese rigidity")
    report.cite("K_X + det E is spanned once ample", "Lanteri-Maeda, Theorem A")
    return report.build()


def triple_section_report() -> VerdictReport:
    report = ReportBuilder("triple-section", "phi is not of triple section type")
    y = ScrollOverSurface(obvious_bundle())
    report.check(
        "K_Y = kH against K_Y = -2H + pi^*(K_X + det E): k",
        canonical_of_scroll(y).h_coeff,
        -2,
        Provenance.QUOTED,
    )
    report.check(
        "obvious case: K_X + det E",
        y.adjoint,
        -y.base.generator("h"),
        Provenance.DERIVED,
    )
    report.check(
        "obvious case: K_X + det E is not trivial",
        y.adjoint.is_zero(),
        False,
        Provenance.QUOTED,
    )
    report.cite("otherwise K_X + det E is ample", "prop-a")
    report.note("in particular phi is never a cyclic cover")
    return report.build()


# -----------------------------------------------------------------------------
# Decomposable bundles
# -----------------------------------------------------------------------------


def decomp_E_search(limit: int) -> List[Tuple[int, int, int]]:
    """
    All (M^2, M.N, N^2) of ample M, N with M^2 + M.N + N^2 = 3.

    Ampleness makes every entry positive; the Hodge index theorem bounds M.N.
    """
    if limit < 1:
        raise InvalidInputError("decomp_E_search", f"limit {limit} < 1")
    found = []
    for m2 in range(1, limit + 1):
        for mn in range(1, limit + 1):
            for n2 in range(1, limit + 1):
                if m2 + mn + n2 != 3:
                    continue
                if not hodge_index_numeric(m2, mn, n2):
                    logger.debug("decomp: (%d, %d, %d) violates Hodge index", m2, mn, n2)
                    continue
                found.append((m2, mn, n2))
    return found


def e_decomp_report() -> VerdictReport:
    report = ReportBuilder("e-decomp", "E is indecomposable outside the obvious case")
    triples = decomp_E_search(3)
    report.check("(M^2, M.N, N^2) with sum 3", triples, [(1, 1, 1)], Provenance.QUOTED)
    report.check("same result for limit 10", decomp_E_search(10), triples, Provenance.DERIVED)
    report.check(
        "(2, 0, 1) fails positivity of M.N",
        (2, 0, 1) in triples,
        False,
        Provenance.TRIVIAL,
    )

    m2, mn, n2 = triples[0]
    report.check("(M - N).M", m2 - mn, 0, Provenance.QUOTED)
    report.check("(M - N)^2", m2 - 2 * mn + n2, 0, Provenance.QUOTED)
    report.check("Hodge index holds with equality", mn * mn == m2 * n2, True, Provenance.DERIVED)
    report.cite("M and N are numerically equivalent", "Hodge index theorem")
    report.check("N^2 = 1 with N spanned gives (P^2, O(1)): H^3", hcube(obvious_bundle()), 3, Provenance.DERIVED)
    report.cite("Ext^1(N, M) = H^1(O_P2) = 0, so E splits", "Bott vanishing")
    return report.build()


# -----------------------------------------------------------------------------
# Fano threefolds
# -----------------------------------------------------------------------------


def fano_candidates() -> List[Tuple[str, RankTwoBundle, RankTwoBundle]]:
    """(label, E, F) with E = F(D) and 0 -> O(-kernel) -> O^3 -> E -> 0."""
    plane, quadric = projective_plane(), quadric_surface()
    out = []
    for label, base, kernel, d in (
        ("(1) P^2", plane, plane.divisor(2), plane.divisor(1)),
        ("(2) P1xP1", quadric, quadric.divisor(1, 1), quadric.divisor(1, 1)),
    ):
        e = cokernel_of_line(base, kernel)
        out.append((label, e, twist(e, -d)))
    return out


def fano_filter() -> VerdictReport:
    """The two Fano candidates have H^3 = 0; their non-ampleness is cited."""
    report = ReportBuilder("fano", "Fano threefolds with a triple solid structure")
    expected = {"(1) P^2": ((2,), 4, -3), "(2) P1xP1": ((1, 1), 2, 0)}
    for label, e, f in fano_candidates():
        c1, c2, xi_cube = expected[label]
        report.check(f"{label}: c1(E)", e.c1, list(c1), Provenance.DERIVED)
        report.check(f"{label}: c2(E)", e.c2, c2, Provenance.DERIVED)
        report.check(f"{label}: H^3", hcube(e), 0, Provenance.DERIVED)
        report.check(f"{label}: H^3 = 3 fails", hcube(e) != 3, True, Provenance.DERIVED)
        report.check(f"{label}: xi^3 = c1(F)^2 - c2(F)", hcube(f), xi_cube, Provenance.DERIVED)
        report.check(f"{label}: xi^3 divisible by 3", hcube(f) % 3, 0, Provenance.QUOTED)
        d = (e.c1 - f.c1).divide_exact(2)
        report.check(
            f"{label}: H^3 = xi^3 + 3D.(c1(F) + D)",
            hcube(f) + 3 * intersect(e.base, d, f.c1 + d),
            hcube(e),
            Provenance.QUOTED,
        )
        report.cite(f"{label}: E is not ample", "fibres of the second projection miss H")
    report.cite("the rank-2 Fano bundles on del Pezzo surfaces", "Szurek-Wisniewski list")
    return report.build()


# -----------------------------------------------------------------------------
# Genus and Delta-genus
# -----------------------------------------------------------------------------


def genus_filter_report() -> VerdictReport:
    report = ReportBuilder("genus-filter", "g >= 3, with g = 3 only for c1 = 4h, c2 = 13 on P^2")
    report.cite("g <= 1 excluded since K_X + det E is ample", "Fujita's classification")
    report.cite("g = 2 forces E decomposable", "Fania-Ionescu appendix")
    report.cite("g = 3 leaves X = P^2 with det E = O(4)", "Fania-Ionescu, Theorem 2.1 (III)")

    plane = projective_plane()
    det = plane.divisor(4)
    report.check("g(P^2, O(4))", sectional_genus(plane, det), 3, Provenance.DERIVED)
    report.check("b = 2g + 4 at g = 3", 2 * 3 + 4, 10, Provenance.DERIVED)
    report.check(
        "generic splitting types of degree 4",
        ample_split_rank2_on_P1(4),
        [(3, 1), (2, 2)],
        Provenance.QUOTED,
    )

    h = plane.generator("h")
    split = RankTwoBundle.split(plane, 3 * h, h)
    report.check("O(3) + O(1): H^3, excluded by e-decomp", hcube(split), 13, Provenance.DERIVED)
    tangent = RankTwoBundle.tangent_plane()
    parities = {twist(tangent, k * h).c1.coeffs[0] % 2 for k in range(-3, 4)}
    report.check("twists of T_P2 have odd c1", parities, {1}, Provenance.QUOTED)

    c2 = sp.Symbol("c2", integer=True)
    (c2_val,) = sp.solve(sp.Eq(self_intersection(plane, det) - c2, 3), c2)
    report.check("H^3 = 3 with c1 = 4h gives c2", c2_val, 13, Provenance.QUOTED)
    report.check("(4h, 13): H^3", hcube(candidate_bundle()), 3, Provenance.DERIVED)
    report.cite("splitting type (2, 2) gives E semistable", "Okonek-Schneider-Spindler, Lemma 2.2.1")
    return report.build()


def delta_genus_report() -> VerdictReport:
    report = ReportBuilder("delta-genus", "Delta-genus bounds for (Y, H)")
    for h0 in (4, 5, 6):
        report.check(
            f"Delta(Y, H) with h0(H) = {h0}",
            delta_genus(PolarizedData(dim=3, degree=3, h0=h0)),
            6 - h0,
            Provenance.DERIVED,
        )
    report.check("h0(H) >= 4 gives Delta <= 2", 6 - 4, 2, Provenance.QUOTED)

    h0_obvious = 2 * plane_sections(1)
    report.check("obvious case: h0(O(1) + O(1))", h0_obvious, 6, Provenance.DERIVED)
    report.check(
        "obvious case: Delta(P^2 x P^1, O(1,1))",
        delta_genus(PolarizedData(dim=3, degree=3, h0=h0_obvious)),
        0,
        Provenance.QUOTED,
    )
    report.check("hyperplane ascent with h0(H_Y) = 4", hyperplane_ascent_delta(4), 1, Provenance.QUOTED)
    report.check("hyperplane ascent with h0(H_Y) = 5", hyperplane_ascent_delta(5), 0, Provenance.DERIVED)
    report.cite("Delta = 1: smooth cubic threefold; Delta = 0: Segre P^2 x P^1", "Fujita, Corollary 6.7")
    return report.build()


# -----------------------------------------------------------------------------
# Registration
# -----------------------------------------------------------------------------


@verifier(name="delta-genus", order=70, doc="Delta-genus of (Y, H) and hyperplane ascent")
def _delta_genus(ctx: VerificationContext) -> VerdictReport:
    return delta_genus_report()


@verifier(name="stability", order=80, doc="E is Bogomolov stable outside the obvious case")
def _stability(ctx: VerificationContext) -> VerdictReport:
    return stability_report()


@verifier(name="conic-fibration", order=90, doc="(Y, R) as a conic bundle, 2 c1(F) + 3B = 0")
def _conic_fibration(ctx: VerificationContext) -> VerdictReport:
    return conic_fibration_report()


@verifier(name="prop-a", order=100, doc="K_X + det E is ample and spanned")
def _prop_a(ctx: VerificationContext) -> VerdictReport:
    return prop_A_exclusions()


@verifier(name="triple-section", order=110, doc="phi is not of triple section type")
def _triple_section(ctx: VerificationContext) -> VerdictReport:
    return triple_section_report()


@verifier(name="e-decomp", order=120, doc="decomposable E only in the obvious case")
def _e_decomp(ctx: VerificationContext) -> VerdictReport:
    return e_decomp_report()


@verifier(name="fano", order=130, doc="Fano triple solids are the obvious case")
def _fano(ctx: VerificationContext) -> VerdictReport:
    return fano_filter()


@verifier(name="genus-filter", order=150, doc="sectional genus g >= 3")
def _genus_filter(ctx: VerificationContext) -> VerdictReport:
    return genus_filter_report()
