"""Ideal connectedness of graphs.

A graph is ideally connected when every pair of vertices is joined by
``min{deg u, deg v}`` internally disjoint paths. The package provides a
max-flow oracle for this, recognizers for cographs, chordal, split and
threshold graphs, the fast deciders those classes admit, kappa-clique-cut
decomposition, and clique-tree tools for chordal graphs.
"""

from .graph import (
    Graph,
    complement,
    graph_join,
    graph_union,
    induced_subgraph,
    parse_edgelist,
    parse_graph6,
    to_edgelist,
    to_graph6,
)
from .connectivity import (
    PathSystem,
    average_connectivity,
    disjoint_paths,
    is_ideally_connected,
    is_strongly_m_menger,
    local_connectivity,
    vertex_connectivity,
)
from .theorems import fast_ideal_chordal, fast_ideal_cograph, fast_verdict

__version__ = "0.1.0"
