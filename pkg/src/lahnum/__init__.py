"""Exact Lah numbers and machine checks of their identities."""

from .exact_core import (
    LahPolynomial,
    LahTable,
    associated_lah,
    lah,
    lah_enumeration_oracle,
    lah_polynomial,
    lah_row,
    lah_total,
    recovered_closed_form,
    shifted_lah_polynomial,
)
from .factorial_basis import (
    ExactPolynomial,
    LaurentExpDerivative,
    TruncatedSeries,
    alternating_generating_series,
    exp_reciprocal_derivative,
    falling_factorial,
    lah_generating_series,
    rising_factorial,
    rising_in_falling_coefficients,
)
from .integral_verify import IdentityReport, run_suite
from .quadrature import QuadratureResult, integrate_semi_infinite
from .sequence_props import (
    DifferenceTable,
    RootCertificate,
    absolute_convexity_check,
    convexity_check,
    finite_difference,
    root_certificate,
)
from .special_functions import SeriesValue, bessel_i1, h_k_closed_form, hypergeom_1f2

__version__ = "0.1.0"
