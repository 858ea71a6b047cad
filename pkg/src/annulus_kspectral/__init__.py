"""Lower and upper bounds for the spectral constant of the annulus.

Builds the weighted bilateral shift and witness vectors that push the lower
bound on K(R) to 2, and evaluates the closed-form bounds from the literature.
"""

from .bounds import (
    BoundValue,
    badea_lower,
    bbc_gamma_lower,
    bbc_upper,
    bound_table,
    cg_upper,
    shields_upper,
    shift_witness_lower,
)
from .calculus import NormEstimate, apply_laurent, apply_laurent_adjoint, operator_norm
from .certificate import (
    CertificateParams,
    CertificateResult,
    best_ratio,
    closed_form_ratio,
    evaluate_certificate,
    make_witness,
    paper_chain_value,
    sweep,
)
from .core import (
    AnnulusParams,
    CoeffVector,
    LaurentPolynomial,
    TruncationWindow,
    WeightSequence,
    beta,
    make_gn,
)
from .errors import (
    ConsistencyViolation,
    InvariantViolation,
    NonConvergenceWarning,
    WindowOverflow,
    WindowTooLarge,
)
from .shift import (
    ShiftOperator,
    apply_power,
    apply_power_adjoint,
    canonical_window,
    inverse_shift_norm,
    shift_norm,
)
from .supnorm import SupNormResult, gn_sup_norm_closed, sup_norm_sampled

__version__ = "0.1.0"
