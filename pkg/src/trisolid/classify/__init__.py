"""
trisolid.classify - Theorem-level verifiers for the classification.

This package provides the verifier registry and every case analysis of the
classification of triple solids with a scroll structure.

Public API:
    - verifier: Decorator registering a verifier under a stable id
    - run_verifier / run_all: Execute one or every verifier
    - list_verifiers: Registered ids in run order
    - VerdictReport / Step / Provenance: the record a verifier returns
    - CaseRecord / FilterOutcome: annotated rows of the enumeration over P^2

Topic modules:
    - curves: double solids and scrolls over curves
    - surfaces: scrolls over surfaces (stability, Fano, decomposability)
    - planes: scrolls over P^2 (the twelve cases, Grassmannian, P^3 parity)
"""

from __future__ import annotations

# Import topic modules to register their verifiers (side-effect imports)
from . import (
    curves,  # noqa: F401
    planes,  # noqa: F401
    surfaces,  # noqa: F401
)
from .core import (
    CaseRecord,
    FilterOutcome,
    Provenance,
    ReportBuilder,
    Step,
    VerdictReport,
    VerificationContext,
    describe_verifier,
    get_verifier,
    list_verifiers,
    plain,
    run_all,
    run_verifier,
    verifier,
)
from .curves import (
    ReiderSearch,
    curve_exclusion_polynomial,
    double_solid_classify,
    elliptic_scroll_cases,
    exclude_a3_case,
    reider_obstruction_search,
    scroll_over_curve_exclusions,
)
from .planes import (
    DEFAULT_FILTER_ORDER,
    FilteredTable,
    GrassmannResiduals,
    enumerate_table1,
    filter_table1,
    grassmann_relations,
    grassmann_residuals,
    linear_system_conditions,
    remark_final_degree,
    schwarzenberger,
)
from .surfaces import decomp_E_search, fano_filter, hcube, prop_A_exclusions

__all__ = [
    # Registry
    "verifier",
    "get_verifier",
    "list_verifiers",
    "describe_verifier",
    "run_verifier",
    "run_all",
    # Reports
    "VerificationContext",
    "VerdictReport",
    "Step",
    "Provenance",
    "ReportBuilder",
    "CaseRecord",
    "FilterOutcome",
    "plain",
    # Scrolls over curves
    "double_solid_classify",
    "exclude_a3_case",
    "scroll_over_curve_exclusions",
    "curve_exclusion_polynomial",
    "elliptic_scroll_cases",
    "reider_obstruction_search",
    "ReiderSearch",
    # Scrolls over surfaces
    "hcube",
    "prop_A_exclusions",
    "decomp_E_search",
    "fano_filter",
    # Scrolls over P^2
    "enumerate_table1",
    "filter_table1",
    "FilteredTable",
    "DEFAULT_FILTER_ORDER",
    "schwarzenberger",
    "grassmann_relations",
    "grassmann_residuals",
    "GrassmannResiduals",
    "linear_system_conditions",
    "remark_final_degree",
]
