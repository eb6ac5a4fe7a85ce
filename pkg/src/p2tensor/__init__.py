"""Generic cohomology computations for stable sheaves on P^2."""

from .arith import QuadraticNumber, compare, parse_rational, solve_monic_quadratic
from .chern import (
    ChernCharacter,
    SlopeDiscPoint,
    chi_tensor,
    dual,
    hilbert_p,
    minimal_integral_on_parabola,
    parse_character,
    serre_dual,
    tensor,
    twist,
)
from .cohomology import (
    CohomologyReport,
    GGVerdict,
    Region,
    classify_region,
    cohomologically_orthogonal,
    generic_cohomology,
    hom_globally_generated,
    sufficient_multiple,
    tensor_globally_generated,
    twist_by_exceptional,
)
from .correspondence import (
    NotStableError,
    OrthogonalPair,
    ResolutionData,
    SignCase,
    corresponding_exceptionals,
    kronecker_fibration_shape,
    orthogonal_characters,
    orthogonal_intersection,
    resolution,
)
from .exceptional import (
    DepthExceeded,
    ExceptionalSlope,
    LocateKind,
    LocateResult,
    decompose,
    delta,
    dot,
    epsilon,
    exc_globally_generated,
    exc_hom_globally_generated,
    exc_pair_cohomology,
    exists_positive_dimensional_moduli,
    is_exceptional_character,
    locate,
    mutation_slopes,
)
from .kronecker import (
    GeneralDecomposition,
    KroneckerShape,
    decompose_general,
    euler_form,
    exceptional_orbit,
    general_hom_ext,
    semistable_exists,
)
from .oracle import OracleConfig, delta_brute_force, kronecker_hom_oracle

__all__ = [
    "ChernCharacter",
    "chi_tensor",
    "classify_region",
    "cohomologically_orthogonal",
    "CohomologyReport",
    "compare",
    "corresponding_exceptionals",
    "decompose",
    "decompose_general",
    "delta",
    "delta_brute_force",
    "DepthExceeded",
    "dot",
    "dual",
    "epsilon",
    "euler_form",
    "exc_globally_generated",
    "exc_hom_globally_generated",
    "exc_pair_cohomology",
    "exceptional_orbit",
    "ExceptionalSlope",
    "exists_positive_dimensional_moduli",
    "general_hom_ext",
    "GeneralDecomposition",
    "generic_cohomology",
    "GGVerdict",
    "hilbert_p",
    "hom_globally_generated",
    "is_exceptional_character",
    "kronecker_fibration_shape",
    "kronecker_hom_oracle",
    "KroneckerShape",
    "locate",
    "LocateKind",
    "LocateResult",
    "minimal_integral_on_parabola",
    "mutation_slopes",
    "NotStableError",
    "OracleConfig",
    "orthogonal_characters",
    "orthogonal_intersection",
    "OrthogonalPair",
    "parse_character",
    "parse_rational",
    "QuadraticNumber",
    "Region",
    "resolution",
    "ResolutionData",
    "semistable_exists",
    "serre_dual",
    "SignCase",
    "SlopeDiscPoint",
    "solve_monic_quadratic",
    "sufficient_multiple",
    "tensor",
    "tensor_globally_generated",
    "twist",
    "twist_by_exceptional",
]

__version__ = "0.1.0"
