"""Exact mutations of Laurent polynomials, property (V) and upper bounds."""

from ._core import (
    DirectionNotInCollection,
    Laurent,
    OutsideBinomialClass,
    ParseError,
    RationalFunction,
    Seed,
    SeedFileError,
    UnsupportedShape,
    b_matrix,
    bfz_matrix_mutate,
    check_property_v,
    collection_mutate,
    fn_mutate,
    generators,
    i_omega,
    member_via_generators,
    mutation_is_laurent,
    parse,
    pl_mutate,
    pl_mutate_inv,
    potential_mutate,
    reflect,
    run_suite,
    sample_ub_element,
    suite_names,
    verify_ring_identities,
    verify_vlemma,
)

__all__ = [name for name in dir() if not name.startswith("_")]
