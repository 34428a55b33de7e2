"""Exact invariants, stability chambers and minima data for U(p,q)-Higgs bundles
and holomorphic triples."""
from .invariants import (
    HiggsType,
    InputError,
    InvariantViolation,
    MinimaType,
    SurfaceData,
    TripleType,
    census,
    higgs_to_triple,
    is_allowed,
    minima_type,
    mw_bound,
    mw_value,
    triple_to_higgs,
)
from .stability import (
    AlphaBound,
    SubtripleClass,
    alpha_max,
    alpha_slope,
    dual,
    slope,
    subtriple_margin,
)
from .walls import (
    Chamber,
    Degenerate,
    Inside,
    OnWall,
    OutOfRange,
    Wall,
    chamber_of,
    chambers,
    critical_values,
    mw_alpha_consistency,
    oracle_critical_values,
    wall_alpha,
)
from .extensions import ChiReport, chi_bundle, expected_dim, hom_complex_chi
from .vhs import (
    GradedPiece,
    HodgeChain,
    Minimum,
    NotMinimumByLemma,
    NotMinimumNumerical,
    adjoint_grading,
    chain_to_higgs,
    classify_chain,
    iso_feasible,
)

__version__ = "0.1.0"
