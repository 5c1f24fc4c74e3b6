"""Exact Hosoya index toolkit.

Computation of total matching counts over exact integers, constructors for
the extremal unicyclic families, isomorphism-free enumeration of unicyclic
graphs, and the executable verification checks for the ordering results.
"""

from ._hosoya import (  # noqa: F401
    Graph,
    HosoyaError,
    ahu_encode,
    attach_path,
    build_family,
    canonical_code,
    check_cassini_like,
    check_splitting_identity,
    closed_form_z,
    count_unicyclic,
    enumerate_trees,
    enumerate_unicyclic,
    family_catalog,
    fib,
    fib_product_chain,
    format_edge_list,
    hosoya,
    hosoya_bruteforce,
    hosoya_forest,
    hosoya_recursive,
    hosoya_unicyclic,
    matching_polynomial,
    parse_edge_list,
    verify_family_chains,
    verify_fib_identities,
    verify_girth_max,
    verify_girth_second_max,
    verify_largest_ordering,
    verify_noncycle_bound,
    verify_path_position_chain,
    verify_small_ordering,
)

__version__ = "0.1.0"
