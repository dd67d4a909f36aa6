"""chebprob: exact probability numbers of reciprocal Chebyshev series,
Euler polynomial identities, and seeded Monte Carlo verification.

The probability numbers p_ell are the power-series coefficients of
1/T_N(1/z), where T_N is the first-kind Chebyshev polynomial; they form the
law of a random index mu_N supported on {N, N+2, ...}.  The package computes
them by three independent algorithms (exact series reciprocal, root-angle
trigonometry, ballot-number sums), builds classical and generalized Euler
polynomials by two independent algorithms, and verifies the identities that
tie the two families together, exactly where possible and statistically
where not.
"""

from .chebyshev import (
    DensePolynomial,
    binet_T,
    chebyshev_T,
    chebyshev_U,
    eval_float,
    reversed_T,
)
from .eulerpoly import (
    EulerTable,
    PolyInX,
    euler_at_zero,
    euler_numbers,
    euler_poly,
    eval_poly,
    gen_euler_recursive,
    gen_euler_series,
    gen_euler_zero,
)
from .exactnum import (
    ballot_number,
    binomial,
    catalan_number,
    catalan_sequence,
    convolution_power,
    convolve,
    format_rational,
)
from .identities import (
    CatalanGFReport,
    CatalanPrefixReport,
    ConvergenceError,
    QSequence,
    ReconstructionResult,
    asymptotic_ratio,
    catalan_gf_check,
    catalan_prefix_check,
    expectation_form_check,
    q_sequence,
    reconstruct_euler,
)
from .probnum import (
    CrossValidationError,
    CrossValidationReport,
    ProbTable,
    RootAngle,
    alternating_phase_sum,
    catalan_table,
    cross_validate,
    geometric_tail_bound,
    probnum_catalan,
    probnum_series,
    probnum_trig,
    root_angles,
    tail_mass,
    trig_value,
)
from .series import TruncatedSeries
from .stochastic import (
    MomentEntry,
    MomentReport,
    RandomStream,
    mc_euler_poly,
    mc_gen_euler,
    mc_klebanov,
    moment_integral_check,
    sample_mu,
    sample_sech,
    sech_cdf,
    sech_density,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exactnum
    "binomial", "catalan_number", "catalan_sequence", "ballot_number",
    "convolve", "convolution_power", "format_rational",
    # series
    "TruncatedSeries",
    # chebyshev
    "DensePolynomial", "chebyshev_T", "chebyshev_U", "reversed_T",
    "eval_float", "binet_T",
    # probnum
    "ProbTable", "RootAngle", "CrossValidationError", "CrossValidationReport",
    "probnum_series", "probnum_trig", "probnum_catalan", "catalan_table",
    "trig_value", "alternating_phase_sum", "cross_validate", "tail_mass",
    "geometric_tail_bound", "root_angles",
    # eulerpoly
    "EulerTable", "PolyInX", "euler_numbers", "euler_at_zero", "euler_poly",
    "gen_euler_zero", "gen_euler_recursive", "gen_euler_series", "eval_poly",
    # identities
    "ConvergenceError", "ReconstructionResult", "QSequence",
    "CatalanPrefixReport", "CatalanGFReport", "reconstruct_euler",
    "expectation_form_check", "asymptotic_ratio", "q_sequence",
    "catalan_prefix_check", "catalan_gf_check",
    # stochastic
    "RandomStream", "MomentEntry", "MomentReport", "sample_sech", "sample_mu",
    "sech_cdf", "sech_density", "mc_euler_poly", "mc_gen_euler",
    "mc_klebanov", "moment_integral_check",
]
