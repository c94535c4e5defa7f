"""Exact tools for framed surface-quiver representations and nested 0-cycles.

The package keeps every computation over the rationals: representations,
stability verdicts, chart dictionaries, ideals of 0-cycles and the
symbolic monad are all exact.  The only floating-point surface is
`support_approx`, which is clearly quarantined and never feeds back into
the exact layer.
"""

from .chart import (
    AdhmData,
    NestedAdhmData,
    NuPoint,
    build_nested_adhm,
    canonical_form,
    chart_embed,
    chart_extract,
    closure_rank,
    find_regular_nu,
    pencil_combos,
    regular_sample,
    sigma_matrix,
    transform_chart,
)
from .correspondence import nested_to_rep, rep_to_nested, same_orbit
from .errors import (
    BadPair,
    ChartUnavailable,
    ConeViolation,
    DomainError,
    ExcludedLocus,
    IllConditioned,
    IrregularPencil,
    NestquivError,
    NotAnIdeal,
    NotCommuting,
    NotCostable,
    NotFixedForm,
    NotInjective,
    NotIntertwining,
    NotStable,
    NotWellDefined,
    RelationsViolated,
    ShapeMismatch,
    Singular,
    SingularAnu,
)
from .ideals import (
    NestedIdealPair,
    Poly2,
    ZeroCycleIdeal,
    adhm_from_ideal,
    colength,
    contains,
    enumerate_nested_monomial,
    ideal_from_adhm,
    inclusion_matrix,
    monomial_ideal,
    partitions,
    support_approx,
)
from .monad import (
    CoxPoly,
    MonadComplex,
    build_monad,
    check_complex,
    complex_residuals,
    cox_mul,
    fiber_ranks,
)
from .quiver import EnhRep, GaugeElement, HirzRep, act, enh_residuals, hirz_residuals
from .ratmat import RationalMatrix, rank, rat, rat_str
from .stability import (
    EnhThetaParam,
    GammaParam,
    StabilityVerdict,
    default_theta,
    in_enh_cone,
    in_gamma_c,
    is_costable,
    is_gamma_stable,
    is_theta_stable,
    kernel_subrep,
    oracle_semistable_fixed,
)

__version__ = "0.1.0"

__all__ = [
    "AdhmData",
    "BadPair",
    "ChartUnavailable",
    "ConeViolation",
    "CoxPoly",
    "DomainError",
    "EnhRep",
    "EnhThetaParam",
    "ExcludedLocus",
    "GammaParam",
    "GaugeElement",
    "HirzRep",
    "IllConditioned",
    "IrregularPencil",
    "MonadComplex",
    "NestedAdhmData",
    "NestedIdealPair",
    "NestquivError",
    "NotAnIdeal",
    "NotCommuting",
    "NotCostable",
    "NotFixedForm",
    "NotInjective",
    "NotIntertwining",
    "NotStable",
    "NotWellDefined",
    "NuPoint",
    "Poly2",
    "RationalMatrix",
    "RelationsViolated",
    "ShapeMismatch",
    "Singular",
    "SingularAnu",
    "StabilityVerdict",
    "ZeroCycleIdeal",
    "act",
    "adhm_from_ideal",
    "build_monad",
    "build_nested_adhm",
    "canonical_form",
    "chart_embed",
    "chart_extract",
    "check_complex",
    "closure_rank",
    "complex_residuals",
    "colength",
    "contains",
    "cox_mul",
    "default_theta",
    "enh_residuals",
    "enumerate_nested_monomial",
    "fiber_ranks",
    "find_regular_nu",
    "hirz_residuals",
    "ideal_from_adhm",
    "in_enh_cone",
    "in_gamma_c",
    "inclusion_matrix",
    "is_costable",
    "is_gamma_stable",
    "is_theta_stable",
    "kernel_subrep",
    "monomial_ideal",
    "nested_to_rep",
    "oracle_semistable_fixed",
    "partitions",
    "pencil_combos",
    "rat",
    "rat_str",
    "rep_to_nested",
    "regular_sample",
    "same_orbit",
    "sigma_matrix",
    "support_approx",
    "transform_chart",
    "rank",
]
