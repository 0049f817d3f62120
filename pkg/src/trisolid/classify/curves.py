"""
trisolid.classify.curves - Double and triple covers that are scrolls over curves.

Contains: the degree factorisation d = aK, the double-solid classification,
the exclusion of a = 3 for triple planes, the two elimination polynomials in
the genus q of the base curve, the elliptic ruled cases and the numeric
Reider obstruction search.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

import sympy as sp
from sympy.solvers.diophantine import diophantine

from trisolid.bundles import ample_split_rank2_on_P1
from trisolid.errors import InvalidInputError, ReiderPreconditionError
from trisolid.intersection import (
    DivisorClass,
    SurfaceModel,
    canonical_class,
    hirzebruch,
    intersect,
    quadric_surface,
    ruled_surface,
    self_intersection,
)
from trisolid.scroll import (
    ScrollOverCurve,
    degree_over_P1,
    dual_curve_scroll,
    scroll_examples,
)
from trisolid.tripleplane import miranda

from .core import (
    Provenance,
    ReportBuilder,
    VerdictReport,
    VerificationContext,
    verifier,
)

logger = logging.getLogger(__name__)

Q = sp.Symbol("q", integer=True)


# -----------------------------------------------------------------------------
# Degree factorisation
# -----------------------------------------------------------------------------


def degree_factor_expression(a: int, n: int, m: int) -> sp.Expr:
    """
    K in d = H^n = aK for H = aL + pi^*D on a scroll of dimension n over an m-fold.

    The symbol t_j stands for L^{n-j} . (pi^*D)^j.
    """
    if not 1 <= m < n:
        raise InvalidInputError("degree_factor_expression", f"n={n}, m={m}")
    t = sp.symbols(f"t0:{m + 1}", integer=True)
    return sp.expand(
        sum(comb(n, j) * a ** (n - j - 1) * t[j] for j in range(m + 1))
    )


def factor_coefficients(expr: sp.Expr) -> List[int]:
    """Coefficients of t0, t1, ... in a linear form."""
    gens = sorted(expr.free_symbols, key=str)
    return [int(expr.coeff(t)) for t in gens]


def integer_content(expr: sp.Expr) -> int:
    """gcd of the integer coefficients of a linear form in the t_j."""
    gens = sorted(expr.free_symbols, key=str)
    return int(sp.Poly(expr, *gens).content())


# -----------------------------------------------------------------------------
# Double solids
# -----------------------------------------------------------------------------


def double_solid_classify() -> VerdictReport:
    """A double n-solid is a scroll only as (P^1 x P^1, O(1,1))."""
    report = ReportBuilder(
        "double-solid", "Double solids admitting a scroll structure"
    )
    report.check("a divides the prime degree 2", sp.divisors(2), [1, 2], Provenance.TRIVIAL)
    k = degree_factor_expression(2, 2, 1)
    report.check(
        "a = 2 gives 1 = 2(L^2 + deg D): content of K",
        integer_content(k),
        2,
        Provenance.QUOTED,
    )

    b = sp.Symbol("b", integer=True)
    (b_val,) = sp.solve(sp.Eq(b - 3, -2), b)
    report.check(
        "(b-3)H = -2H + pi^*(K_X + det E) gives branch half-degree b",
        b_val,
        1,
        Provenance.QUOTED,
    )

    deg = sp.Symbol("deg_det", integer=True)
    (deg_det,) = sp.solve(sp.Eq(-2 + deg, 0), deg)
    report.check("K_P1 + det E = O forces deg det E", deg_det, 2, Provenance.QUOTED)
    report.check("K_X + det E has degree", -2 + deg_det, 0, Provenance.TRIVIAL)
    report.check(
        "ample rank-2 splittings of degree 2 on P^1",
        ample_split_rank2_on_P1(int(deg_det)),
        [(1, 1)],
        Provenance.QUOTED,
    )

    quadric = quadric_surface()
    h = quadric.divisor(1, 1)
    report.check(
        "H^2 on (P1xP1, O(1,1)) equals the cover degree",
        self_intersection(quadric, h),
        2,
        Provenance.DERIVED,
    )
    d, h0 = degree_over_P1(ScrollOverCurve((0,), 1, 2))
    report.check("scroll P(O + O) twisted by 1 has (d, h0)", (d, h0), (2, 4), Provenance.QUOTED)
    report.note("unique model: (P1xP1, O(1,1))")
    return report.build()


# -----------------------------------------------------------------------------
# Triple planes over curves
# -----------------------------------------------------------------------------


def tschirnhaus_b1(a: int) -> sp.Expr:
    """
    c1(T) as a function of the base genus q.

    Riemann-Hurwitz on a general line gives 2g - 2 = -6 - 2 b1, with
    2g - 2 = 6q - 4 when a = 3 and g = q when a = 1.
    """
    b1 = sp.Symbol("b1", integer=True)
    if a == 3:
        two_g_minus_two = 6 * Q - 4
    elif a == 1:
        two_g_minus_two = 2 * Q - 2
    else:
        raise InvalidInputError("tschirnhaus_b1", f"a={a} is not a divisor of 3")
    (solution,) = sp.solve(sp.Eq(two_g_minus_two, -6 - 2 * b1), b1)
    return sp.expand(solution)


def curve_exclusion_polynomial(a: int) -> sp.Poly:
    """
    The relation in q left after eliminating b2 from Miranda's formulas.

    Y is a P^1-bundle over a genus-q curve, so K^2 = 8(1-q) and e = 4(1-q).
    Normalized to a positive leading coefficient.
    """
    b1 = tschirnhaus_b1(a)
    b2 = sp.Symbol("b2")
    ksq_expr, euler_expr = miranda(b1, b2)
    (b2_sol,) = sp.solve(sp.Eq(ksq_expr, 8 * (1 - Q)), b2)
    residual = sp.expand(euler_expr.subs(b2, b2_sol) - 4 * (1 - Q))
    poly = sp.Poly(residual, Q)
    if poly.LC() < 0:
        poly = -poly
    return poly


def integer_roots(poly: sp.Poly) -> List[int]:
    return sorted(int(r) for r in sp.roots(poly) if r.is_integer)


def scroll_over_curve_exclusions() -> VerdictReport:
    """Only q = 0 and q = 1 survive for triple planes scrolled over a curve."""
    report = ReportBuilder(
        "curve-exclusions", "Triple planes that are scrolls over a curve of genus q"
    )

    b1_a3 = tschirnhaus_b1(3)
    report.check("a = 3: -b1 as a polynomial in q", sp.Poly(-b1_a3, Q), [3, 1], Provenance.QUOTED)
    raw = curve_exclusion_polynomial(3)
    content, primitive = raw.primitive()
    report.check("a = 3: eliminated relation", raw, [18, -58, 24], Provenance.DERIVED)
    report.check("a = 3: content of the relation", content, 2, Provenance.DERIVED)
    report.check("a = 3: primitive relation", primitive, [9, -29, 12], Provenance.QUOTED)
    report.check("a = 3: integer roots", integer_roots(raw), [], Provenance.QUOTED)

    b1_a1 = tschirnhaus_b1(1)
    report.check("a = 1: -b1 as a polynomial in q", sp.Poly(-b1_a1, Q), [1, 2], Provenance.QUOTED)
    raw = curve_exclusion_polynomial(1)
    report.check("a = 1: eliminated relation", raw, [2, -2, 0], Provenance.DERIVED)
    report.check("a = 1: primitive relation q(q-1)", raw.primitive()[1], [1, -1, 0], Provenance.QUOTED)
    report.check("a = 1: integer roots", integer_roots(raw), [0, 1], Provenance.QUOTED)

    b1_rational = int(b1_a1.subs(Q, 0))
    report.check("q = 0: b1", b1_rational, -2, Provenance.DERIVED)
    f1 = hirzebruch(1)
    report.check(
        "q = 0: Miranda at (b1, b2) = (-2, 1) matches F1",
        miranda(b1_rational, 1),
        (f1.ksq, f1.euler),
        Provenance.DERIVED,
    )
    sigma, f = f1.generator("sigma"), f1.generator("f")
    h = sigma + 2 * f
    report.check("q = 0: (F1, sigma + 2f) has H^2", self_intersection(f1, h), 3, Provenance.QUOTED)
    report.check(
        "q = 0: P(O(1) + O(2)) has (d, h0)",
        degree_over_P1(ScrollOverCurve((1,), 1, 2)),
        (3, 5),
        Provenance.QUOTED,
    )
    report.note("q = 1 is settled by the elliptic-cases and reider verifiers")
    return report.build()


def exclude_a3_case() -> VerdictReport:
    """H = 3L + pi^*D never occurs for triple covers scrolled over a curve."""
    report = ReportBuilder("a3-case", "Exclusion of a = 3 for triple covers")
    report.check("a divides the prime degree 3", sp.divisors(3), [1, 3], Provenance.TRIVIAL)

    x, y = sp.symbols("x y", integer=True)
    solutions = diophantine(3 * x + 2 * y - 1)
    report.check(
        "1 = 3 deg E' + 2 deg D has integer solutions",
        bool(solutions),
        True,
        Provenance.DERIVED,
    )
    report.check("particular solution (1, -1)", 3 * 1 + 2 * (-1), 1, Provenance.TRIVIAL)
    report.check(
        "n = 2, m = 1: K for a = 3",
        factor_coefficients(degree_factor_expression(3, 2, 1)),
        [3, 2],
        Provenance.QUOTED,
    )

    for m, expected in ((1, 9), (2, 3)):
        k = degree_factor_expression(3, 3, m)
        report.check(
            f"n = 3, m = {m}: content of K, so 1 = K is impossible mod 3",
            integer_content(k),
            expected,
            Provenance.QUOTED,
        )

    b1 = tschirnhaus_b1(3)
    report.check("2g - 2 at q = 1", 6 * 1 - 4, 2, Provenance.DERIVED)
    report.check("-b1 at q = 1", int(-b1.subs(Q, 1)), 4, Provenance.DERIVED)
    report.check(
        "elimination leaves 9q^2 - 29q + 12",
        curve_exclusion_polynomial(3).primitive()[1],
        [9, -29, 12],
        Provenance.QUOTED,
    )
    report.check(
        "which has no integer root",
        integer_roots(curve_exclusion_polynomial(3)),
        [],
        Provenance.QUOTED,
    )
    return report.build()


# -----------------------------------------------------------------------------
# Elliptic scrolls
# -----------------------------------------------------------------------------


def elliptic_ample(e: int, b: int) -> bool:
    """sigma + bf is ample on an elliptic ruled surface iff b > e (e >= 0), b >= 0 (e = -1)."""
    if e >= 0:
        return b > e
    return e == -1 and b >= 0


def elliptic_scroll_cases() -> List[Tuple[int, int]]:
    """All (e, b) with H = sigma + bf ample and H^2 = 3 over an elliptic curve."""
    cases = []
    # e >= -1 over a genus-1 curve; b = (e+3)/2 > e forces e < 3
    for e in range(-1, 4):
        if e % 2 == 0:
            continue
        b = (e + 3) // 2
        model = ruled_surface(1, e)
        h = model.divisor(1, b)
        if self_intersection(model, h) != 3 or not elliptic_ample(e, b):
            logger.debug("elliptic: (e, b) = (%d, %d) rejected", e, b)
            continue
        cases.append((e, b))
    return cases


@dataclass(frozen=True)
class ReiderSearch:
    """
    Lattice solutions of the two numeric Reider obstructions.

    caso1: D.M = 0 and D^2 = -1; caso2: D.M = 1 and D^2 = 0.
    `witness` is the caso1 class with positive sigma coefficient.
    """

    window: int
    caso1: Tuple[DivisorClass, ...]
    caso2: Tuple[DivisorClass, ...]
    witness: Optional[DivisorClass]
    witness_dot_sigma: Optional[int]


def reider_obstruction_search(
    model: SurfaceModel, m: DivisorClass, window: int = 10
) -> ReiderSearch:
    """All D = x sigma + y f with |x|, |y| <= window obstructing K + M."""
    if window < 1:
        raise InvalidInputError("reider_obstruction_search", f"window {window} < 1")
    m_sq = self_intersection(model, m)
    if m_sq <= 5:
        raise ReiderPreconditionError(m_sq)
    caso1, caso2 = [], []
    for x in range(-window, window + 1):
        for y in range(-window, window + 1):
            d = model.divisor(x, y)
            dm, dd = intersect(model, d, m), self_intersection(model, d)
            if dm == 0 and dd == -1:
                caso1.append(d)
            elif dm == 1 and dd == 0:
                caso2.append(d)
    witness = next((d for d in caso1 if d.coeffs[0] > 0), None)
    dot = None
    if witness is not None:
        dot = intersect(model, witness, model.generator(model.basis[0]))
    return ReiderSearch(window, tuple(caso1), tuple(caso2), witness, dot)


def elliptic_cases_report() -> VerdictReport:
    report = ReportBuilder("elliptic-cases", "Surface scrolls of degree 3 over an elliptic curve")
    report.check("(e, b) candidates", elliptic_scroll_cases(), [(-1, 1), (1, 2)], Provenance.QUOTED)
    report.check("e = 3 gives b = 3, not ample", elliptic_ample(3, 3), False, Provenance.DERIVED)

    model = ruled_surface(1, -1)
    h = model.divisor(1, 1)
    report.check("e = -1: H^2", self_intersection(model, h), 3, Provenance.TRIVIAL)

    model = ruled_surface(1, 1)
    h, sigma = model.divisor(1, 2), model.generator("sigma")
    report.check(
        "e = 1: deg H on the elliptic section sigma, so H is not spanned",
        intersect(model, h, sigma),
        1,
        Provenance.QUOTED,
    )
    report.check(
        "incidence construction with d = 3 has an elliptic base",
        dual_curve_scroll(3).base_genus,
        1,
        Provenance.DERIVED,
    )
    return report.build()


def reider_report(window: int) -> VerdictReport:
    report = ReportBuilder("reider", "Spannedness of sigma + f on the e = -1 elliptic scroll")
    model = ruled_surface(1, -1)
    h = model.divisor(1, 1)
    m = h - canonical_class(model)
    report.check("M = H - K_Y", m, model.divisor(3, 0), Provenance.QUOTED)
    report.check("M^2", self_intersection(model, m), 9, Provenance.QUOTED)

    search = reider_obstruction_search(model, m, window)
    report.check(f"D.M = 1, D^2 = 0 within window {window}", list(search.caso2), [], Provenance.QUOTED)
    report.check(
        f"D.M = 0, D^2 = -1 within window {window}",
        sorted(d.coeffs for d in search.caso1),
        [(-1, 1), (1, -1)],
        Provenance.QUOTED,
    )
    report.check("witness D = sigma - f", search.witness, model.divisor(1, -1), Provenance.QUOTED)
    report.check("D.sigma for the witness", search.witness_dot_sigma, 0, Provenance.QUOTED)
    report.cite(
        "sigma moves in a family covering Y, so D.sigma = 0 contradicts effectivity",
        "ruled surfaces with e = -1",
    )
    return report.build()


def scroll_examples_report() -> VerdictReport:
    report = ReportBuilder("scroll-examples", "Scrolls over P^1 as finite covers of P^n")
    expected = [(2, 2, 4), (2, 3, 5), (3, 3, 6)]
    computed = [(s.n, d, h0) for s, d, h0 in scroll_examples()]
    report.check("(n, d, h0) of the classical projections", computed, expected, Provenance.QUOTED)
    for s, d, h0 in scroll_examples():
        report.check(f"d >= n for n = {s.n}, d = {d}", d >= s.n, True, Provenance.DERIVED)
        report.check(
            f"n = {s.n}, d = {d}: Delta-genus n + d - h0",
            s.n + d - h0,
            0,
            Provenance.DERIVED,
        )
    segre = ScrollOverCurve((0, 0), 1, 3)
    report.check("d = n exactly for the product scroll", segre.is_product_scroll, True, Provenance.QUOTED)
    report.check(
        "base genus of the incidence scroll for d = 4",
        dual_curve_scroll(4).base_genus,
        3,
        Provenance.DERIVED,
    )
    return report.build()


# -----------------------------------------------------------------------------
# Registration
# -----------------------------------------------------------------------------


@verifier(name="scroll-examples", order=10, doc="scrolls over P^1 and their degrees")
def _scroll_examples(ctx: VerificationContext) -> VerdictReport:
    return scroll_examples_report()


@verifier(name="double-solid", order=20, doc="double solids with a scroll structure")
def _double_solid(ctx: VerificationContext) -> VerdictReport:
    return double_solid_classify()


@verifier(name="a3-case", order=30, doc="exclusion of H = 3L + pi^*D")
def _a3_case(ctx: VerificationContext) -> VerdictReport:
    return exclude_a3_case()


@verifier(name="curve-exclusions", order=40, doc="genus of the base curve: q in {0, 1}")
def _curve_exclusions(ctx: VerificationContext) -> VerdictReport:
    return scroll_over_curve_exclusions()


@verifier(name="elliptic-cases", order=50, doc="(e, b) for elliptic scrolls of degree 3")
def _elliptic_cases(ctx: VerificationContext) -> VerdictReport:
    return elliptic_cases_report()


@verifier(name="reider", order=60, doc="numeric Reider obstructions on the e = -1 scroll")
def _reider(ctx: VerificationContext) -> VerdictReport:
    return reider_report(ctx.window)
