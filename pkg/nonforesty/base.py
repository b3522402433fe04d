"""Graph type, basic constructors/combinators and the exception classes."""

from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from . import settings

class GraphException(ValueError):
    """To be raised on invalid graph input.

    :param vertex: The offending vertex, if any.
    """
    def __init__(self, msg, vertex: Optional[int] = None):
        super().__init__(msg)

        self.vertex = vertex

class Graph6Exception(GraphException):
    """To be raised on malformed graph6 or edge-list text.

    :param text: The offending text, if available.
    """
    def __init__(self, msg, text: Optional[str] = None):
        super().__init__(msg)

        self.text = text

class UnsupportedException(Exception):
    """To be raised when a request lies outside what the library can answer (e.g. ``k=3``)."""

class VerificationException(Exception):
    """To be raised if an internal self-check fails.

    This always indicates a bug (or a falsified reconstruction), never bad user input.

    :param graph: The graph that failed the check, if any.
    """
    def __init__(self, msg, graph: Optional["Graph"] = None):
        super().__init__(msg)

        self.graph = graph

def iter_bits(mask: int) ->  Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low

def mask_of(vertices: Iterable[int]) ->  int:
    """Bit mask of a collection of vertices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask

class Graph:
    """An immutable undirected simple graph on the vertices ``0..order-1``.

    The adjacency is stored as one bit row per vertex: bit ``u`` of ``rows[v]`` is set iff ``u`` and
    ``v`` are adjacent. Python integers serve both as the fixed-width rows used by the enumeration
    oracle (order at most 64 fits a machine word) and as growable rows for large constructions.

    The constructor trusts its input; use :func:`make_graph` to build a graph from an edge list
    with validation.

    :param order: The number of vertices.
    :param rows: The adjacency rows; must be symmetric and irreflexive. Defaults to no edges.
    """
    __slots__ = ("_order", "_rows", "_size")

    def __init__(self, order: int, rows: Optional[Sequence[int]] = None) ->  None:
        self._order = order
        self._rows: Tuple[int, ...] = tuple(rows) if rows is not None else (0,)*order
        self._size: Optional[int] = None

    @property
    def order(self) ->  int:
        return self._order

    @property
    def rows(self) ->  Tuple[int, ...]:
        return self._rows

    def __len__(self):
        return self._order

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self):
        return hash((self._order, self._rows))

    def __repr__(self):
        return "Graph(order=%d, size=%d)" % (self._order, self.size())

    def size(self) ->  int:
        """The number of edges, e(G)."""
        if self._size is None:
            self._size = sum(r.bit_count() for r in self._rows) // 2
        return self._size

    def vertices(self) ->  range:
        return range(self._order)

    def _check(self, v: int) ->  None:
        if not 0 <= v < self._order:
            raise GraphException("Vertex %d out of range for order %d" % (v, self._order), vertex=v)

    def has_edge(self, u: int, v: int) ->  bool:
        self._check(u)
        self._check(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) ->  int:
        self._check(v)
        return self._rows[v].bit_count()

    def degrees(self) ->  List[int]:
        return [r.bit_count() for r in self._rows]

    def min_degree(self) ->  int:
        """δ(G); 0 for the empty graph."""
        return min(self.degrees(), default=0)

    def max_degree(self) ->  int:
        """Δ(G); 0 for the empty graph."""
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) ->  Tuple[int, ...]:
        """N(v) as a sorted tuple."""
        self._check(v)
        return tuple(iter_bits(self._rows[v]))

    def closed_neighborhood(self, v: int) ->  Tuple[int, ...]:
        """N[v] = N(v) ∪ {v}, sorted."""
        self._check(v)
        return tuple(iter_bits(self._rows[v] | 1 << v))

    def neighborhood_of_set(self, vertices: Iterable[int]) ->  Tuple[int, ...]:
        """N(S): the vertices outside S having a neighbor in S."""
        s = 0
        for v in vertices:
            self._check(v)
            s |= 1 << v
        out = 0
        for v in iter_bits(s):
            out |= self._rows[v]
        return tuple(iter_bits(out & ~s))

    def degree_in(self, v: int, vertices: Iterable[int]) ->  int:
        """deg_S(v) = |N(v) ∩ S|."""
        self._check(v)
        return (self._rows[v] & mask_of(vertices)).bit_count()

    def edges_between(self, s: Iterable[int], t: Iterable[int]) ->  List[Tuple[int, int]]:
        """[S, T]: the edges with one end in S and the other in T, for disjoint S and T."""
        s, t = mask_of(s), mask_of(t)
        if s & t:
            raise GraphException("Vertex sets must be disjoint")
        out = []
        for u in iter_bits(s):
            out.extend((min(u, v), max(u, v)) for v in iter_bits(self._rows[u] & t))
        return sorted(out)

    def edges(self) ->  List[Tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in ascending lexicographic order."""
        out = []
        for u, row in enumerate(self._rows):
            out.extend((u, v) for v in iter_bits(row >> (u+1) << (u+1)))
        return out

    def components(self) ->  List[Tuple[int, ...]]:
        """The connected components, each a sorted tuple, ordered by smallest vertex."""
        seen = 0
        out = []
        for v in range(self._order):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self._rows[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(tuple(iter_bits(comp)))
        return out

    def is_connected(self) ->  bool:
        """Whether the graph is connected; the empty graph is not."""
        return len(self.components()) == 1

    def relabel(self, perm: Sequence[int]) ->  "Graph":
        """Return the graph in which vertex ``v`` is renamed ``perm[v]``."""
        if sorted(perm) != list(range(self._order)):
            raise GraphException("Not a permutation of the vertices")
        rows = [0]*self._order
        for v, row in enumerate(self._rows):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(row))
        return Graph(self._order, rows)

    def add_edges(self, edges: Iterable[Tuple[int, int]]) ->  "Graph":
        """Return a copy of the graph with the given edges added."""
        rows = list(self._rows)
        for u, v in edges:
            _check_edge(self._order, u, v)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self._order, rows)

    def remove_vertices(self, vertices: Iterable[int]) ->  "Graph":
        """Return G - S, relabeled order-preservingly."""
        s = mask_of(vertices)
        return induced_subgraph(self, [v for v in range(self._order) if not s >> v & 1])

def _check_edge(order: int, u: int, v: int) ->  None:
    for x in (u, v):
        if not 0 <= x < order:
            raise GraphException("Endpoint %d out of range for order %d" % (x, order), vertex=x)
    if u == v:
        raise GraphException("Loop edge at vertex %d" % u, vertex=u)

def make_graph(order: int, edges: Iterable[Tuple[int, int]] = (), cap: int = settings.ORDER_CAP) ->  Graph:
    """Build a graph from an edge list.

    Duplicate edges (in either orientation) are collapsed.

    :param order: The number of vertices.
    :param edges: The edges as vertex pairs.
    :param cap: The largest accepted order.
    """
    if order < 0:
        raise GraphException("Order must be nonnegative, got %d" % order)
    elif order > cap:
        raise GraphException("Order %d exceeds the cap of %d" % (order, cap))
    rows = [0]*order
    for u, v in edges:
        _check_edge(order, u, v)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, rows)

def induced_subgraph(g: Graph, vertices: Iterable[int]) ->  Graph:
    """G[S], with S relabeled order-preservingly to ``0..|S|-1``.

    :param g: The graph.
    :param vertices: The vertex set S; duplicates are ignored.
    """
    s = 0
    for v in vertices:
        g._check(v)
        s |= 1 << v
    keep = list(iter_bits(s))
    index = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        rows.append(mask_of(index[u] for u in iter_bits(g.rows[v] & s)))
    return Graph(len(keep), rows)

def disjoint_union(g: Graph, h: Graph) ->  Graph:
    """G + H; the vertices of H follow those of G."""
    shift = g.order
    return Graph(g.order + h.order, g.rows + tuple(r << shift for r in h.rows))

def join(g: Graph, h: Graph) ->  Graph:
    """G ∨ H: the disjoint union plus every edge between G and H."""
    shift = g.order
    gmask = (1 << g.order) - 1
    hmask = ((1 << h.order) - 1) << shift
    return Graph(
        g.order + h.order,
        tuple(r | hmask for r in g.rows) + tuple(r << shift | gmask for r in h.rows),
    )

## Named graphs

def empty_graph(n: int) ->  Graph:
    return make_graph(n)

def complete_graph(n: int) ->  Graph:
    return make_graph(n, combinations(range(n), 2))

def path_graph(n: int) ->  Graph:
    return make_graph(n, ((i, i+1) for i in range(n-1)))

def cycle_graph(n: int) ->  Graph:
    if n < 3:
        raise ValueError("A cycle needs at least 3 vertices, got %d" % n)
    return make_graph(n, ((i, (i+1) % n) for i in range(n)))

def wheel_graph(m: int) ->  Graph:
    """K₁ ∨ C_m; the hub is vertex 0."""
    return join(complete_graph(1), cycle_graph(m))

def matching_graph(t: int) ->  Graph:
    """t·K₂, edges ``(2i, 2i+1)``."""
    return make_graph(2*t, ((2*i, 2*i+1) for i in range(t)))

def petersen_graph() ->  Graph:
    """Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes ``i -- i+5``."""
    edges = [(i, (i+1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i+2) % 5) for i in range(5)]
    edges += [(i, i+5) for i in range(5)]
    return make_graph(10, edges)
