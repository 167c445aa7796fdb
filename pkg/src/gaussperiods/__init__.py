"""Complexity of Gauss period normal bases over finite fields."""

from .complexity import (
    CharSpec,
    ComplexityResult,
    EligibilityReport,
    check_eligibility,
    complexity,
    complexity_profile,
    n2_distribution,
    theorem_1_1,
)
from .cyclostats import (
    GaussParams,
    SparseCosetMatrix,
    TauDistribution,
    brute_force_matrix,
    distribution_from_matrix,
    is_s_injective,
    tau_distribution,
)
from .errors import (
    GaussPeriodError,
    InvariantViolation,
    NotEligibleError,
    ParameterError,
    TrivialDegreeError,
)
from .exceptional import ExceptionalRecord, exceptional_primes

__version__ = "0.1.0"
