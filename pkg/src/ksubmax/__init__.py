"""Value-oracle toolkit for maximizing k-submodular and related k-set
functions, with exhaustive property checkers and exact-expectation oracles
that verify every approximation guarantee at desk scale."""

from .core import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_STATES,
    EPS,
    Assignment,
    Dims,
    GreedyTrace,
    InputError,
    OracleRangeError,
    PreconditionError,
    ValueOracle,
    all_assignments,
    all_orthants,
    assignment_of,
    extend_to_orthant,
    id0,
    index_of,
    is_orthant,
    marginal,
    max0,
    min0,
    restrict,
    support,
    with_label,
)
from .zoo import (
    EmbeddedBisubmodular,
    GraphInstance,
    TabularFunction,
    coverage_gamma,
    embed_submodular,
    make_coverage_tight,
    make_det_greedy_tight,
    make_indicator,
    make_layer_layout,
    make_max_k_cut,
    random_ksubmodular,
    random_table,
    sum_combine,
    tabulate,
)
from .checks import (
    CheckReport,
    check_characterization,
    check_k_submodular,
    check_orthant_pair_inequality,
    check_orthant_submodular,
    check_r_wise_monotone,
    induced_set_function,
)
from .maximize import (
    MaximizeResult,
    brute_force_max,
    det_greedy_guarantee,
    deterministic_greedy,
    empirical_expectation,
    exact_expectation_random_orthant,
    exact_expectation_randomized_greedy,
    naive_random_sample,
    rand_greedy_guarantee,
    rand_greedy_guarantee_ksub,
    random_orthant_guarantee,
    randomized_greedy,
)
from .instances import InstanceSpec, parse_instance

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CheckReport",
    "DEFAULT_MAX_PAIRS",
    "DEFAULT_MAX_STATES",
    "Dims",
    "EPS",
    "EmbeddedBisubmodular",
    "GraphInstance",
    "GreedyTrace",
    "InputError",
    "InstanceSpec",
    "MaximizeResult",
    "OracleRangeError",
    "PreconditionError",
    "TabularFunction",
    "ValueOracle",
    "all_assignments",
    "all_orthants",
    "assignment_of",
    "brute_force_max",
    "check_characterization",
    "check_k_submodular",
    "check_orthant_pair_inequality",
    "check_orthant_submodular",
    "check_r_wise_monotone",
    "coverage_gamma",
    "det_greedy_guarantee",
    "deterministic_greedy",
    "embed_submodular",
    "empirical_expectation",
    "exact_expectation_random_orthant",
    "exact_expectation_randomized_greedy",
    "extend_to_orthant",
    "id0",
    "index_of",
    "induced_set_function",
    "is_orthant",
    "make_coverage_tight",
    "make_det_greedy_tight",
    "make_indicator",
    "make_layer_layout",
    "make_max_k_cut",
    "marginal",
    "max0",
    "min0",
    "naive_random_sample",
    "parse_instance",
    "rand_greedy_guarantee",
    "rand_greedy_guarantee_ksub",
    "random_ksubmodular",
    "random_orthant_guarantee",
    "random_table",
    "randomized_greedy",
    "restrict",
    "sum_combine",
    "support",
    "tabulate",
    "with_label",
]
