"""Barnes double zeta-function toolkit.

Evaluation of zeta_2(s, alpha; v, w) across the complex plane, Laurent
coefficient extraction at the poles s = 1 and s = 2 by three mutually
checking routes, double gamma / poly-gamma special values, and numerical
certification suites for the underlying identities.
"""

from .barnes import (
    BarnesParams,
    log_gamma2,
    polygamma2,
    zeta2,
    zeta2_direct,
    zeta2_integral_rep,
    zeta2_s_derivatives_at_0,
)
from .config import EvalConfig
from .errors import (
    AccuracyError,
    BarnesZetaError,
    ConsistencyError,
    DomainError,
    PoleError,
)
from .hurwitz import (
    StieltjesTable,
    gamma0_integral,
    hurwitz_zeta,
    riemann_zeta,
    stieltjes_constants,
)
from .laurent import (
    LaurentExpansion,
    gamma0_at_2_integral,
    gammak_at_2_limit,
    laurent_at_1,
    laurent_at_2,
    residue_at_1,
    residue_at_2,
)
from .numerics import (
    ContourSpec,
    QuadratureSpec,
    bernoulli_numbers,
    contour_coefficients,
    frac_part_integral_1d,
    frac_part_integral_2d,
    richardson_extrapolate,
)
from .verify import (
    CEstimate,
    Check,
    VerificationReport,
    default_parameter_suite,
    estimate_C,
    run_suites,
    verify_bounds,
    verify_reduction,
    verify_theorem1,
    verify_theorem2_altsum,
    verify_theorem2_derivative,
)

__version__ = "0.1.0"
