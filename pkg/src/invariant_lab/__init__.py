"""Invariants (idempotents) modulo m and what they say about m."""
from .arithmetic import (
    Factorization,
    NaturalRangeError,
    OracleBoundError,
    crt_combine,
    extended_gcd,
    factorize,
    gcd,
    is_prime,
    mod_pow,
)
from .carmichael import (
    CarmichaelRecord,
    OmegaReport,
    carmichael_lambda,
    hypothesis_check,
    korselt_check,
    omega_paper,
    omega_report,
    scan_carmichael,
)
from .euler import (
    EulerClassification,
    SubgroupTable,
    euler_classification,
    euler_phi,
    expected_idempotent,
    generalized_euler_residue,
    multiplier_exponent_check,
    subgroup_table,
    verify_generalization,
)
from .invariants import (
    CompositeCertificate,
    InvariantReport,
    anti_of,
    certify_composite_from_invariant,
    enumerate_invariants_bruteforce,
    invariants_from_factorization,
    is_anti_invariant,
    is_invariant,
    power_stability_check,
    primality_by_invariants,
    tuples_of,
)

__version__ = "0.1.0"
