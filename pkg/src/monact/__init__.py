"""Finite monoids, their idempotent completions, and their action categories.

Two independent decision procedures for Morita equivalence of finite monoids
(the eMe/β/β' witness search and Karoubi-envelope equivalence) plus monoid
reconstruction from any indecomposable projective separator of the action
category.
"""

from .monoid import (
    AssociativityViolated,
    FiniteMonoid,
    IdentityLawViolated,
    InvalidMap,
    MonoidError,
    MonoidProperties,
    NotIdempotent,
    OutOfRangeEntry,
    SizeTooLarge,
    classify_properties,
    enumerate_monoids,
    find_isomorphism,
    idempotent_leq_right,
    idempotent_leq_two_sided,
    idempotents,
    left_ideals,
    local_submonoid,
    right_ideals,
    same_monoid,
    semigroup_closure,
    transformation_monoid_closure,
    validate_monoid,
)
from .morita import (
    ChainReport,
    Conjugation,
    EquivalenceWitness,
    MoritaError,
    MoritaWitness,
    NotParallel,
    PreconditionFailed,
    SemigroupHom,
    TrivialityReport,
    canonical_factorization,
    conjugations_between,
    hom_compose,
    identity_hom,
    idempotent_chain,
    invert_conjugation,
    is_equivalence_hom,
    morita_equivalent,
    semigroup_homs,
    triviality_report,
)
from .karoubi import (
    CatFunctor,
    CatNatTrans,
    EmbeddingReport,
    EquivalenceData,
    KaroubiCategory,
    KaroubiError,
    NotAnObject,
    all_functors,
    all_natural_transformations,
    categories_equivalent,
    conjugation_from_nat_trans,
    extend_semigroup_hom,
    full_subcategory_embedding_check,
    is_natural_isomorphism,
    karoubi_envelope,
    nat_trans_from_conjugation,
    object_isomorphism,
    restrict_functor,
    skeleton,
    verify_equivalence,
)
from .mset import (
    EmptyMSet,
    FiniteMSet,
    MSetError,
    MSetHom,
    MonoidMismatch,
    NotASeparator,
    NotIndecomposableProjective,
    PointClass,
    PointReport,
    SeparatorWitness,
    UnitLawViolated,
    cofree_mset,
    connected_components_count,
    constant_mset,
    decompose,
    endomorphism_monoid,
    essential_points,
    fixed_points,
    free_mset,
    hom_msets,
    is_atomic_topos,
    is_indecomposable,
    is_projective,
    is_separator,
    mset_hom_compose,
    msets_isomorphic,
    orbit_partition,
    principal_mset,
    reconstruct_from_separator,
    regular_mset,
    restrict_action,
    separator_witness,
    sub_mset,
    sub_msets,
    terminal_mset,
    validate_mset,
)
from .files import (
    ParseError,
    parse_monoid_file,
    parse_monoid_text,
    parse_mset_file,
    serialize_monoid,
    serialize_monoid_text,
    serialize_mset,
)

__version__ = "0.1.0"
