"""Impartial games as digraphs.

Rulegraphs and gamegraphs, valuations such as nim values and outcomes,
option-preserving maps, congruences and quotients, canonical hereditarily
finite set forms, builders for classic games, and enumeration of simple
rulegraphs.
"""

from .builders import (
    GAME_KINDS,
    GameSpec,
    box_sum,
    build,
    grundy,
    m_graph,
    maze,
    natural_map,
    nim_multiset,
    nim_tuple,
    star,
    subtraction,
    wythoff,
)
from .congruence import (
    CongruenceLattice,
    Quotient,
    con_lattice,
    emulationally_equivalent,
    greedy_min_quotient,
    is_congruence,
    is_simple,
    iter_congruences,
    join,
    max_congruence,
    meet,
    min_quotient,
    pushforward_congruence,
    quotient,
)
from .enumeration import (
    CountTable,
    count_min_positions,
    count_simple_rulegraphs,
    enumerate_by_fbd,
    enumerate_simple_rulegraphs,
    feasibility,
    index_table,
    iter_by_fbd,
    iter_simple_rulegraphs,
    tower2,
    x_total,
)
from .errors import (
    BudgetExceeded,
    CycleDetected,
    DuplicateLabel,
    GamegraphError,
    InvalidSpec,
    LabelMismatch,
    MultipleSources,
    NoSource,
    NotACongruence,
    NotMembershipClosed,
    NotOptionPreserving,
    NotRefinement,
    ParseError,
    SelfLoop,
    UnknownEndpoint,
    UnknownPosition,
    ValidationError,
)
from .graph import (
    Gamegraph,
    Rulegraph,
    as_gamegraph,
    gamma,
    induced_gamegraph,
    induced_subgraph,
    new_gamegraph,
    new_rulegraph,
    random_gamegraph,
    random_rulegraph,
    sources,
    subpositions,
    terminals,
)
from .hfset import HfArena, HfSet, canonicalize, collection_to_rulegraph, hf_order, notation
from .io import export_dot, parse_graph, parse_map, parse_partition, serialize_graph, serialize_map, serialize_partition
from .morphism import (
    PositionMap,
    Verdict,
    are_isomorphic,
    check_faithful,
    check_option_preserving,
    check_source_preserving,
    compose,
    find_option_preserving_map,
    identity,
    image_rulegraph,
    inverse,
    iter_option_preserving_maps,
    kernel,
)
from .partition import Partition
from .valuation import (
    N,
    P,
    Aggregator,
    evaluate,
    fbd,
    formal_birthdays,
    min_distance_to_terminal,
    nim_values,
    outcome_misere,
    outcome_normal,
    outcome_with_terminal_labels,
)

__version__ = "0.1.0"
