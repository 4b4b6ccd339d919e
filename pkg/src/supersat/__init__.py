"""Chain counting, symmetric chain decompositions, and supersaturation
bounds in the subset lattice, with brute-force oracles at small n."""

from supersat.core import (
    Family,
    FamilyFormatError,
    LevelInterval,
    binom,
    build_b_family,
    level,
    middle_levels,
    parse_family,
    serialize_family,
    sigma,
)
from supersat.scd import (
    Chain,
    Decomposition,
    Permutation,
    ScdValidation,
    bracketing_chain_of,
    chain_through,
    permute_decomposition,
    scd_bracketing,
    scd_inductive,
    validate_scd,
)
from supersat.counting import (
    count_chains_with_max_endpoint,
    count_chains_with_min_endpoint,
    count_included_chains,
    count_k_chains,
    count_k_chains_naive,
)
from supersat.bounds import (
    BoundReport,
    MinMaxYZReport,
    binomial_identity_holds,
    bound_report,
    build_extremal_family,
    min_max_yz,
    min_max_yz_exhaustive,
    min_max_yz_minimizer,
    min_max_yz_verification,
    n_permutations_enumerate,
    n_permutations_factorial,
    n_permutations_ratio,
    supersat_bound,
    tight_x_max,
    yz,
)
from supersat.oracle import (
    KleitmanRow,
    OracleResult,
    centered_family,
    kleitman_report,
    max_free_family,
    min_chain_count_exact,
    min_chain_count_heuristic,
)
from supersat._backend import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "Chain",
    "Decomposition",
    "Family",
    "FamilyFormatError",
    "KleitmanRow",
    "LevelInterval",
    "MinMaxYZReport",
    "OracleResult",
    "Permutation",
    "ScdValidation",
    "binom",
    "binomial_identity_holds",
    "bound_report",
    "bracketing_chain_of",
    "build_b_family",
    "build_extremal_family",
    "centered_family",
    "chain_through",
    "count_chains_with_max_endpoint",
    "count_chains_with_min_endpoint",
    "count_included_chains",
    "count_k_chains",
    "count_k_chains_naive",
    "kleitman_report",
    "level",
    "max_free_family",
    "middle_levels",
    "min_chain_count_exact",
    "min_chain_count_heuristic",
    "min_max_yz",
    "min_max_yz_exhaustive",
    "min_max_yz_minimizer",
    "min_max_yz_verification",
    "n_permutations_enumerate",
    "n_permutations_factorial",
    "n_permutations_ratio",
    "parse_family",
    "permute_decomposition",
    "scd_bracketing",
    "scd_inductive",
    "serialize_family",
    "sigma",
    "supersat_bound",
    "tight_x_max",
    "validate_scd",
    "yz",
]
