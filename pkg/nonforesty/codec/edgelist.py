"""Human-readable edge lists, for debugging.

The format is a first line ``n m`` followed by ``m`` lines ``u v`` with 0-based endpoints, ``u < v``,
in ascending lexicographic order.
"""

from .. import settings
from ..base import Graph, Graph6Exception, GraphException, make_graph

def serialize_edgelist(g: Graph) ->  str:
    edges = g.edges()
    lines = ["%d %d" % (g.order, len(edges))]
    lines.extend("%d %d" % e for e in edges)
    return '\n'.join(lines) + '\n'

def parse_edgelist(text: str, cap: int = settings.ORDER_CAP) ->  Graph:
    """Parse an edge list.

    Endpoint order and line order are not enforced on input, but the edge count must match.
    """
    lines = [l.split() for l in text.splitlines() if l.strip()]
    if not lines:
        raise Graph6Exception("Empty edge list", text=text)
    try:
        header = [int(i) for i in lines[0]]
        edges = [tuple(int(i) for i in l) for l in lines[1:]]
    except ValueError:
        raise Graph6Exception("Edge lists may only contain integers", text=text)
    if len(header) != 2 or any(len(e) != 2 for e in edges):
        raise Graph6Exception("Malformed edge list line", text=text)
    n, m = header
    if m != len(edges):
        raise Graph6Exception("Header announces %d edges, found %d" % (m, len(edges)), text=text)
    try:
        g = make_graph(n, edges, cap=cap)
    except GraphException as e:
        raise Graph6Exception(str(e), text=text)
    if g.size() != m:
        raise Graph6Exception("Duplicate edges in edge list", text=text)
    return g
