"""Polar multiplicities of hypersurface germs and rank bounds for the
cohomology of their real links."""

from .errors import (
    EXIT_EXCLUDED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_UNSTABLE,
    ExcludedCaseError,
    GammaIdentityViolation,
    ImproperIntersection,
    NonIsolated,
    NoValidFrame,
    ParseError,
    PolarlinkError,
    TelescopeViolation,
    WrongPolarDimension,
)
from .ideals import (
    Ideal,
    StandardBasis,
    dimension,
    groebner_basis,
    ideal_quotient,
    intersect,
    is_member,
    local_colength,
    mora_standard_basis,
    normal_form,
    saturate,
)
from .link import (
    BettiVector,
    ChainComplexSpec,
    LambdaProfile,
    MorseBound,
    N1Sequence,
    allowed_degrees,
    betti_feasibility,
    chain_complex,
    lambda_from_gamma,
    morse_bounds,
    n1_exact_sequence,
    telescope_sums,
    telescope_table,
)
from .oracle import (
    OracleVerdict,
    TruncatedColength,
    bezout_gamma,
    gamma_identity_audit,
    stable_colength,
    teissier_check,
    truncated_colength,
)
from .orders import GLOBAL, LOCAL, MonomialOrder, elimination
from .parse import parse_polynomial
from .polar import (
    CoordinateFrame,
    GammaProfile,
    critical_dimension,
    gamma_k,
    gamma_profile,
    identity_frame,
    jacobian_ideal,
    milnor_number,
    polar_ideal,
    sample_frames,
)
from .poly import INFINITE, Polynomial, Rational

__version__ = "0.1.0"
