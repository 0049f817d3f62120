"""
trisolid - Exact arithmetic checks for triple solids with a scroll structure.

A triple solid is a smooth threefold with a finite degree-3 map onto P^3.
This package recomputes, with exact integer and rational arithmetic, every
numerical step of the classification of those which are scrolls: divisor
lattices on surfaces, Chern classes of rank-2 bundles, the invariants of the
triple plane cut out by a hyperplane, and the case analyses built on them.
"""

from trisolid.bundles import (
    BogomolovResult,
    RankThreeBundleData,
    RankTwoBundle,
    Stability,
    ample_split_rank2_on_P1,
    bogomolov,
    cokernel_of_line,
    sym2_twisted_c1,
    twist,
)
from trisolid.classify import (
    CaseRecord,
    VerdictReport,
    enumerate_table1,
    filter_table1,
    list_verifiers,
    run_all,
    run_verifier,
)
from trisolid.errors import (
    BasisMismatchError,
    InfeasibleConditionsError,
    IntegralityError,
    InternalConsistencyError,
    InvalidInputError,
    NonDivisibleClassError,
    NonIntegralGenusError,
    ReiderPreconditionError,
    TrisolidError,
    UnknownVerifierError,
    UnsupportedModelError,
)
from trisolid.intersection import (
    DivisorClass,
    SurfaceModel,
    abstract_regular_surface,
    canonical_class,
    hirzebruch,
    intersect,
    projective_plane,
    quadric_surface,
    ruled_surface,
)
from trisolid.scroll import (
    ScrollOverCurve,
    ScrollOverSurface,
    canonical_of_scroll,
    conic_fibration_data,
    degree_over_P1,
    delta_genus,
    ramification_of_triple_solid,
    sectional_genus,
)
from trisolid.tripleplane import (
    CuspBounds,
    TriplePlaneData,
    branch_invariants,
    cusp_bounds,
    decomposable_invariants,
    gamma_integral_points,
    miranda,
)

__version__ = "0.1.0"

__all__ = [
    # Intersection theory
    "DivisorClass",
    "SurfaceModel",
    "projective_plane",
    "quadric_surface",
    "hirzebruch",
    "ruled_surface",
    "abstract_regular_surface",
    "intersect",
    "canonical_class",
    # Bundles
    "RankTwoBundle",
    "RankThreeBundleData",
    "BogomolovResult",
    "Stability",
    "twist",
    "sym2_twisted_c1",
    "bogomolov",
    "cokernel_of_line",
    "ample_split_rank2_on_P1",
    # Scrolls
    "ScrollOverCurve",
    "ScrollOverSurface",
    "degree_over_P1",
    "canonical_of_scroll",
    "ramification_of_triple_solid",
    "conic_fibration_data",
    "sectional_genus",
    "delta_genus",
    # Triple planes
    "TriplePlaneData",
    "CuspBounds",
    "miranda",
    "branch_invariants",
    "decomposable_invariants",
    "gamma_integral_points",
    "cusp_bounds",
    # Classification
    "CaseRecord",
    "VerdictReport",
    "enumerate_table1",
    "filter_table1",
    "list_verifiers",
    "run_verifier",
    "run_all",
    # Errors
    "TrisolidError",
    "BasisMismatchError",
    "UnsupportedModelError",
    "NonDivisibleClassError",
    "NonIntegralGenusError",
    "IntegralityError",
    "InvalidInputError",
    "InfeasibleConditionsError",
    "InternalConsistencyError",
    "ReiderPreconditionError",
    "UnknownVerifierError",
]
