"""Exact factorization-length invariants and elasticity sets of numerical monoids."""

from .arithmetical import (
    ElasticityTuple,
    TupleComparison,
    arith_max_length,
    arith_min_length,
    compare_tuples,
    elasticity_sets_equal_arithmetical,
    enumerate_tuples,
    length_sets_equal_arithmetical,
    maximal_coprime_tuple,
    phi_embed,
    recover_a_over_k,
    recover_d,
    three_minimal_elasticities,
    tuple_bounds,
    tuple_elasticity,
    witness_element,
)
from .errors import (
    EmptyInput,
    EnumerationLimitExceeded,
    GeneratorTooLarge,
    IncompatibleParams,
    IndexOutOfRange,
    InvalidTuple,
    MonoidError,
    NoSubcollection,
    NonCoprime,
    NonIntegerResult,
    NotApplicable,
    NotArithmetical,
    NotInMonoid,
    SOutOfRange,
    SingleGenerator,
    ZeroGenerator,
)
from .factorizations import (
    Factorization,
    LengthStats,
    elasticity,
    factorizations,
    find_proper_subcollection,
    length_set,
    length_stats_range,
    max_length,
    min_length,
)
from .monoid import (
    ArithmeticalParams,
    NumericalMonoid,
    contains,
    detect_arithmetical,
    frobenius,
    max_elasticity,
    new_monoid,
)
from .profile import (
    ComparisonVerdict,
    ElasticityProfile,
    SequenceAlignment,
    TailSequence,
    build_profile,
    compare_profiles,
    contains_elasticity,
    profile_to_dict,
    profile_to_json,
    sequence_value,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop all cached membership and length tables."""
    from .factorizations import clear_table_cache
    from .monoid import clear_membership_cache

    clear_table_cache()
    clear_membership_cache()
