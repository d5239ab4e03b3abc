"""Valuations on Q, smooth-number densities and progressions of powers.

Exact, desk-scale computations around two arguments for the infinitude of
primes: the product formula for the absolute values of Q, and a search for
arithmetic progressions inside exponent classes of smooth numbers.
"""

from .arith import (
    Factorization,
    Rational,
    factorize,
    factorize_large,
    is_prime,
    normalize,
    nth_prime,
    primes_up_to,
)
from .places import (
    INFINITY,
    ApproxCertificate,
    Place,
    absolute_value,
    crt,
    euclid_witness,
    places_of,
    product_formula_check,
    valuation,
    weak_approximate,
)
from .smooth import (
    density_profile,
    erdos_defect_bound,
    erdos_defect_profile,
    minimal_r_for_tail,
    prime_reciprocal_partial_sum,
    smooth_members,
    tail_reciprocal_sum,
)
from .classes import ExponentClass, class_representative, decompose, exponent_class, partition_classes
from .ap import APWitness, ap_free_max, ap_to_power_witness, class_ap_scan, find_3ap, find_kap
from .verifiers import (
    VerificationReport,
    square_3ap_search,
    verify_no_4_square_ap,
    verify_no_cube_ap,
    verify_no_power_ap,
)
from .pipeline import PipelineReport, Route, run_pipeline

__version__ = "0.1.0"
