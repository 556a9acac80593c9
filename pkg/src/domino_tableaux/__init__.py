"""Domino tableau combinatorics for the hyperoctahedral groups.

Signed permutations, standard domino tableaux, the two-tableau insertion
correspondence, cycle moves, wall-crossing operators, and the annealing map
from a group element to the tableau parametrizing its orbital variety.
"""

from .cycles import (
    Coloring,
    Cycle,
    all_cycles,
    coloring_from_name,
    cycle_of,
    extended_cycle,
    is_boxed,
    local_move_through,
    move_through,
    move_through_extended,
    move_through_set,
)
from .enumeration import (
    DEFAULT_SEED,
    SUITE_NAMES,
    VerificationReport,
    all_sdt,
    count_sdt,
    tau_signature,
    verify_suite,
)
from .insertion import (
    TableauPair,
    insert_letter,
    make_pair,
    pair_deserialize,
    pair_from_json_dict,
    pair_serialize,
    pair_to_json_dict,
    rs,
    rs_inverse,
)
from .operators import (
    OperatorDomainReport,
    OperatorUndefinedError,
    equal_length_domain,
    tau,
    type_d_domain,
    unequal_length_domain,
    wall_cross_equal_length,
    wall_cross_type_d,
    wall_cross_unequal_length,
)
from .partitions import (
    Partition,
    dominates,
    format_partition,
    is_orbit_partition,
    is_special,
    orbit_collapse,
    orbit_dual,
    parse_partition,
    partitions_of,
    transpose,
)
from .pipeline import (
    AnnealStep,
    OrbitalResult,
    PipelineStallError,
    candidate_moves,
    orbit_of,
    orbital_tableau,
    special_projection,
)
from .signed_perm import (
    SignedPerm,
    apply_generator,
    compose,
    enumerate_group,
    format_perm,
    generator,
    identity,
    inverse,
    left_descents,
    length,
    parse_perm,
    right_descents,
)
from .tableau import (
    Domino,
    DominoTableau,
    TableauError,
    deserialize,
    from_json_dict,
    make_domino,
    make_tableau,
    render,
    serialize,
    to_json_dict,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AnnealStep",
    "Coloring",
    "Cycle",
    "DEFAULT_SEED",
    "Domino",
    "DominoTableau",
    "OperatorDomainReport",
    "OperatorUndefinedError",
    "OrbitalResult",
    "Partition",
    "PipelineStallError",
    "SUITE_NAMES",
    "SignedPerm",
    "TableauError",
    "TableauPair",
    "VerificationReport",
    "all_cycles",
    "all_sdt",
    "apply_generator",
    "candidate_moves",
    "coloring_from_name",
    "compose",
    "count_sdt",
    "cycle_of",
    "deserialize",
    "dominates",
    "enumerate_group",
    "equal_length_domain",
    "extended_cycle",
    "format_partition",
    "format_perm",
    "from_json_dict",
    "generator",
    "identity",
    "insert_letter",
    "inverse",
    "is_boxed",
    "is_orbit_partition",
    "is_special",
    "left_descents",
    "length",
    "local_move_through",
    "make_domino",
    "make_pair",
    "make_tableau",
    "move_through",
    "move_through_extended",
    "move_through_set",
    "orbit_collapse",
    "orbit_dual",
    "orbit_of",
    "orbital_tableau",
    "pair_deserialize",
    "pair_from_json_dict",
    "pair_serialize",
    "pair_to_json_dict",
    "parse_partition",
    "parse_perm",
    "partitions_of",
    "render",
    "right_descents",
    "rs",
    "rs_inverse",
    "serialize",
    "special_projection",
    "tau",
    "tau_signature",
    "transpose",
    "type_d_domain",
    "unequal_length_domain",
    "validate",
    "verify_suite",
    "wall_cross_equal_length",
    "wall_cross_type_d",
    "wall_cross_unequal_length",
]
