"""Exact-arithmetic toolkit for strong external difference families (SEDFs).

Verification of candidate families in finite abelian groups, a parameter
sieve built from the known nonexistence conditions, exhaustive search in
small groups, and the Pell-chain prime scan for the open cube-order case.
"""

from sedf.cyclotomic import Cyclotomic, cyclotomic_polynomial
from sedf.groups import AbelianGroup, abelian_groups_of_order, make_group
from sedf.prime_search import P3Candidate, PellSolution, candidate_primes, p3_pipeline, pell_brute, pell_chain
from sedf.search import SearchResult, SearchSpec, exhaustive_search, search_all
from sedf.sieve import (
    AdmissibleA,
    FilterOutcome,
    ParamSet,
    admissible_a,
    apply_filters,
    enumerate_candidates,
    make_param_set,
    sieve_report,
)
from sedf.verifier import (
    CharacterProfile,
    Family,
    FamilyError,
    VerifyReport,
    char_profile,
    external_tally,
    fourier_roundtrip,
    make_family,
    sedf_by_characters,
    verify_sedf,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "AdmissibleA",
    "CharacterProfile",
    "Cyclotomic",
    "Family",
    "FamilyError",
    "FilterOutcome",
    "P3Candidate",
    "ParamSet",
    "PellSolution",
    "SearchResult",
    "SearchSpec",
    "VerifyReport",
    "abelian_groups_of_order",
    "admissible_a",
    "apply_filters",
    "candidate_primes",
    "char_profile",
    "cyclotomic_polynomial",
    "enumerate_candidates",
    "external_tally",
    "exhaustive_search",
    "fourier_roundtrip",
    "make_family",
    "make_group",
    "make_param_set",
    "p3_pipeline",
    "pell_brute",
    "pell_chain",
    "search_all",
    "sedf_by_characters",
    "sieve_report",
    "verify_sedf",
]
