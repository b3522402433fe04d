from .base import (
    Graph, GraphException, Graph6Exception, UnsupportedException, VerificationException,
    make_graph, induced_subgraph, disjoint_union, join,
)
from .formulas import f, size_formula
from .properties import is_locally_nonforesty, is_locally_foresty, local_subgraph, wheel_hubs
from .connectivity import vertex_connectivity, is_k_connected, block_decomposition
from .constructions import build_extremal, harary, minimum_graph
