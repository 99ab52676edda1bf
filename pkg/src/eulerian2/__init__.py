"""Exact computation of second-order Eulerian numbers, Nörlund polynomials and related identities."""

__version__ = "0.1.0"

from .eulerian import (
    EulerianRow,
    descent_count,
    descent_histogram,
    enumerate_stirling_perms,
    eulerian,
    eulerian_row,
    is_stirling_permutation,
)
from .exceptions import (
    DomainError,
    EnumerationLimitError,
    RingMismatchError,
    SingularSeriesError,
    TruncationError,
)
from .identities import IdentityReport, SuiteConfig, run_suite
from .norlund import (
    NorlundPolynomial,
    derivative_at_zero,
    norlund_at_negative_int,
    norlund_int_power,
    norlund_via_egf,
    norlund_via_interpolation,
    norlund_via_theorem1,
)
from .polynomial import Polynomial, format_rational
from .series import (
    QQ,
    QQ_z,
    TruncatedSeries,
    egf_coefficient,
    series_add,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_int,
)
from .special import (
    bernoulli,
    binomial,
    cauchy2,
    double_factorial_odd,
    harmonic,
    rising_factorial_eval,
    rising_factorial_poly,
    stirling1_signed,
    stirling2,
)
