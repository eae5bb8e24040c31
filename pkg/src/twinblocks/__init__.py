"""2-twinless blocks of directed graphs, with the connectivity routines they rest on."""
from .blocks import (
    ALGORITHMS,
    BlockForest,
    RunStats,
    block_forest,
    oracle_two_twinless_blocks,
    refine_family,
    relation_matrix,
    two_twinless_blocks,
    two_twinless_blocks_basic,
    two_twinless_blocks_improved,
    two_twinless_blocks_refine,
)
from .connectivity import (
    BlockFamily,
    Partition,
    biconnected_blocks,
    is_chordal,
    is_strongly_connected,
    maximal_cliques_chordal,
    perfect_elimination_ordering,
    strongly_connected_components,
    two_edge_connected_components,
)
from .errors import InvariantError, NotTwinlessError, OracleBudgetError, ParseError
from .graph import (
    Digraph,
    UndirectedGraph,
    fig1_fixture,
    induced_subgraph,
    parse_edge_list,
    random_digraph,
    random_tsc_digraph,
    remove_vertex,
    to_edge_list,
    underlying_undirected,
)
from .relation import PairMatrix, blocks_from_matrix
from .strong import oracle_two_strong_blocks, strong_articulation_points, two_strong_blocks
from .twinless import (
    is_twinless_strongly_connected,
    is_two_vertex_twinless_connected,
    oracle_twinless_sccs,
    oracle_twinless_witness,
    twinless_articulation_points,
    twinless_sccs,
)
