"""Executable checks for product sets and commutation in linearly ordered semigroups."""

from .core import (
    CapExceededError,
    DomainError,
    EmptySampleError,
    InvariantViolation,
    LawReport,
    Ordering,
    ParseError,
    PreconditionError,
    Semigroup,
    check_associativity,
    check_cancellativity,
    check_order_laws,
    check_total_order,
    compare,
)
from .instances import (
    FinSuppMap,
    PaganoWitness,
    TriMatrix,
    free_monoid,
    index_pair_compare,
    index_pairs,
    left_zero,
    lower_triangular,
    make_instance,
    nat_add,
    nonneg_rationals,
    pagano_witness,
    semigroup_semiring,
    upper_triangular,
)
from .products import (
    DoublingVerdict,
    FiniteSubset,
    disjointness_check,
    product_set,
    sharpness_witness,
    small_doubling_verdict,
    superadditivity_check,
    union_bound_check,
)
from .commute import (
    Universe,
    centralizer,
    check_normalizer_equals_centralizer,
    commutes,
    idempotent_identity_check,
    negative_element_check,
    neumann_chain,
    normalizer,
    periodicity,
    power_commutation_scan,
    words_universe,
    ys_sy_bound,
)
from .search import (
    ScanReport,
    commuting_factorization_search,
    exhaustive_theorem_scan,
    freiman_progression_explorer,
    randomized_law_suite,
)

__version__ = "0.1.0"
