"""
Configuration: All parameters, gates, and seeds for CurveSig validation
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class Paths:
    """Directory paths"""
    outputs = "outputs"
    results = "outputs/results"
    logs = "outputs/logs"
    reports = "outputs/reports"
    golden = "tests/golden"


@dataclass(frozen=True)
class Seeds:
    """REQUIRED fixed seed for reproducibility"""
    master = 172901


@dataclass(frozen=True)
class Corpus:
    """Random corpus sizes for the property suites"""
    # Cross-check suite: both types
    crosscheck_schemes = 200
    crosscheck_max_ovals = 10
    crosscheck_max_depth = 4
    crosscheck_primes = (3, 5, 7, 11, 13)

    # Even-type suite
    even_schemes = 100
    even_max_ovals = 8
    even_symmetry_points = ("1/10", "1/5", "2/9")

    # Inertia oracle
    inertia_matrices = 100
    inertia_max_dim = 6
    inertia_entry_bound = 5

    # Scan completeness self-test
    brute_schemes = 5
    brute_max_prime = 31

    # Round-trip parsing
    roundtrip_max_ovals = 12
    roundtrip_max_depth = 5


@dataclass(frozen=True)
class Families:
    """Infinite-family parameters checked by the golden suite"""
    odd_nest_k = (4, 7, 10)
    double_nest_k = (5, 6, 8)
    hand_formula_max_sum = 12


@dataclass(frozen=True)
class Gates:
    """Acceptance gates (seconds) - exceeding a budget fails the suite"""
    sample_value_s = 1.0
    golden_profile_s = 5.0
    hand_formula_s = 10.0
    families_s = 30.0
    crosscheck_s = 120.0
    scan_completeness_s = 60.0
    roundtrip_s = 10.0
    even_type_s = 60.0
    inertia_oracle_s = 30.0
