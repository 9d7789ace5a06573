"""Finite categories, Kan extensions, codensity monads and algebraic concrete categories."""

from ._kanex import (
    JSON_SCHEMA_VERSION,
    Category,
    ConcreteCategory,
    DslError,
    Functor,
    KanexError,
    Monad,
    NatTrans,
    PolymericIdentity,
    Workspace,
    alg_category,
    codensity_monad,
    concrete_corpus,
    concretely_identical,
    em_category,
    em_identities,
    identity_functor,
    is_beck,
    is_monadic,
    left_adjoint,
    parse,
    parse_file,
    polymeric_variety,
    right_kan,
    run,
    shipped_example,
    verify_alg_universal_iff_codensity,
    verify_beck_theorems,
    verify_em_polymeric,
)

__all__ = [name for name in dir() if not name.startswith("_")]
