"""galstruve: Galue-type Struve functions, Fox-Wright series, and numerical
verification of their integral-transform identities.

The package evaluates the five-parameter Galue-type Struve function and the
generalized Wright hypergeometric series it reduces to, provides the kernel
functions of the Euler, Laplace, Whittaker, K- and fractional Fourier
transforms, and checks each closed-form transform identity against direct
quadrature of its defining integral.
"""

__version__ = "0.1.0"

from ._backend import backend_name
from .errors import (
    ConvergenceViolation,
    DomainError,
    EvaluationUnstable,
    ExtrapolationDiverged,
    GalstruveError,
    MaxSubdivisions,
    NonConvergence,
    NumeratorPole,
    PoleError,
    TruncationUnstable,
)
from .gtsf import GtsfParams, eval_gtsf, eval_h_pbc, gtsf_inner_series
from .kernels import bessel_k, kummer_1f1, whittaker_m, whittaker_w
from .quadrature import (
    QuadratureResult,
    QuadratureSpec,
    integrate_finite,
    integrate_regularized_oscillatory,
    integrate_semi_infinite,
)
from .special import (
    beta,
    gamma,
    log_gamma,
    log_gamma_complex,
    log_gamma_sign,
    recip_gamma,
    rising_factorial,
)
from .verify import (
    ERRATA,
    EulerCase,
    FracFourierCase,
    KTransformCase,
    LaplaceCase,
    TransformCase,
    VerificationReport,
    WhittakerCase,
    frft_continuation,
    frft_phase_factor,
    lhs,
    rhs_euler,
    rhs_frft,
    rhs_ktransform,
    rhs_laplace,
    rhs_whittaker,
    verify,
)
from .wright import SeriesResult, WrightParams, eval_wright, kappa, radius

__all__ = [
    "__version__",
    "backend_name",
    # errors
    "GalstruveError", "DomainError", "PoleError", "ConvergenceViolation",
    "NonConvergence", "NumeratorPole", "MaxSubdivisions", "TruncationUnstable",
    "ExtrapolationDiverged", "EvaluationUnstable",
    # scalar special functions
    "log_gamma", "log_gamma_sign", "gamma", "log_gamma_complex", "recip_gamma",
    "beta", "rising_factorial",
    # wright
    "WrightParams", "SeriesResult", "kappa", "radius", "eval_wright",
    # gtsf
    "GtsfParams", "eval_gtsf", "eval_h_pbc", "gtsf_inner_series",
    # kernels
    "kummer_1f1", "whittaker_m", "whittaker_w", "bessel_k",
    # quadrature
    "QuadratureSpec", "QuadratureResult", "integrate_finite",
    "integrate_semi_infinite", "integrate_regularized_oscillatory",
    # verifier
    "TransformCase", "EulerCase", "LaplaceCase", "WhittakerCase",
    "KTransformCase", "FracFourierCase", "VerificationReport", "ERRATA",
    "verify", "lhs", "rhs_euler", "rhs_laplace", "rhs_whittaker",
    "rhs_ktransform", "rhs_frft", "frft_continuation", "frft_phase_factor",
]
