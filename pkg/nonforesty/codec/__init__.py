"""Text codecs for graphs: graph6 (canonical interchange) and edge lists (debugging).

This submodule may also be called (e.g. with ``python3 -m nonforesty.codec``) to convert a file of
graph6 strings to edge lists.
"""

from .graph6 import parse_graph6, serialize_graph6, read_graph6_lines, from_networkx, to_networkx
from .edgelist import parse_edgelist, serialize_edgelist
