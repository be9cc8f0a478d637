"""Weak Lefschetz property of F_p[X,Y,Z]/(X^d,Y^d,Z^d), decided three ways."""

from .fp_linalg import BACKEND, FpMatrix, PrimeModulus, is_prime, rank
from .graded_algebra import (
    ClosedForm,
    CriterionPair,
    FailingDegree,
    HilbertFunction,
    MonomialBasis,
    WlpVerdict,
    hilbert_function,
    monomial_basis,
    multiplication_matrix,
    wlp_bruteforce,
)
from .syzygy_gap import (
    DegenerateTriple,
    GapCertificate,
    HanCertificate,
    delta_star_han,
    diagonal_condition_scan,
    gap_oracle,
    is_in_L_odd,
    taxicab,
    wlp_han,
)
from .wlp_criterion import (
    char2_degrees,
    decide_wlp_criterion,
    divisor_obstruction,
    exceptional_primes,
    wlp_char2,
)

__version__ = "0.1.0"
