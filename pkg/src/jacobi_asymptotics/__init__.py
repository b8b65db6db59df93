"""Large-degree Jacobi polynomials from asymptotic expansions with certified error bounds."""

from .bounds import (BoundBundle, beta_fn, c_hat_osc, c_hat_outer, c_p_osc, c_p_outer,
                     coeff_magnitude_bound_outer, delta_of, gamma_half)
from .certify import (CertificateRecord, GridSpec, certify_point, convergence_slope,
                      records_to_csv, sweep)
from .coeffs import (CoefficientTable, DensePolynomial, a_coeff, b_coeff,
                     coefficient_fit_oracle, coefficients_at, expansion_coefficients,
                     q_stack, rising_factorial)
from .expand import (Convention, ExpansionResult, GeneralResult, evaluate, evaluate_general,
                     evaluate_osc, evaluate_outer, optimal_truncation, prefactor_osc,
                     prefactor_outer)
from .oracle import (jacobi_recurrence_rational, jacobi_recurrence_scaled, oracle_value_at,
                     oracle_value_rational)
from .params import (DomainError, EndpointError, Parameters, ReductionStep, Region,
                     RegionPoint, ValidityReport, canonicalize, validate_oscillatory,
                     validate_outer)
from .scaled import ScaledReal

__version__ = "0.1.0"

__all__ = [
    "BoundBundle",
    "beta_fn",
    "c_hat_osc",
    "c_hat_outer",
    "c_p_osc",
    "c_p_outer",
    "coeff_magnitude_bound_outer",
    "delta_of",
    "gamma_half",
    "CertificateRecord",
    "GridSpec",
    "certify_point",
    "convergence_slope",
    "records_to_csv",
    "sweep",
    "CoefficientTable",
    "DensePolynomial",
    "a_coeff",
    "b_coeff",
    "coefficient_fit_oracle",
    "coefficients_at",
    "expansion_coefficients",
    "q_stack",
    "rising_factorial",
    "Convention",
    "ExpansionResult",
    "GeneralResult",
    "evaluate",
    "evaluate_general",
    "evaluate_osc",
    "evaluate_outer",
    "optimal_truncation",
    "prefactor_osc",
    "prefactor_outer",
    "jacobi_recurrence_rational",
    "jacobi_recurrence_scaled",
    "oracle_value_at",
    "oracle_value_rational",
    "DomainError",
    "EndpointError",
    "Parameters",
    "ReductionStep",
    "Region",
    "RegionPoint",
    "ValidityReport",
    "canonicalize",
    "validate_oscillatory",
    "validate_outer",
    "ScaledReal",
]
