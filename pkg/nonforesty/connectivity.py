"""Vertex connectivity, k-connectivity tests and the block–cutpoint decomposition."""

from collections import Counter, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from .base import Graph, GraphException, make_graph

def _split_network(g: Graph, s: int, t: int) ->  List[Dict[int, int]]:
    """Residual capacities of the vertex-split network; ``2v`` is v-in, ``2v+1`` is v-out.

    Vertex arcs have capacity 1 and edge arcs capacity ``n``, so every minimum cut consists of
    vertex arcs.
    """
    res: List[Dict[int, int]] = [dict() for _ in range(2*g.order)]

    def arc(a, b, cap):
        res[a][b] = cap
        res[b].setdefault(a, 0)

    for v in range(g.order):
        if v != s and v != t:
            arc(2*v, 2*v+1, 1)
    for u, v in g.edges():
        arc(2*u+1, 2*v, g.order)
        arc(2*v+1, 2*u, g.order)
    return res

def _augment(res: List[Dict[int, int]], source: int, sink: int) ->  bool:
    pred = {source: source}
    queue = deque((source,))
    while queue and sink not in pred:
        a = queue.popleft()
        for b, c in res[a].items():
            if c and b not in pred:
                pred[b] = a
                queue.append(b)
    if sink not in pred:
        return False
    b = sink
    while b != source:
        a = pred[b]
        res[a][b] -= 1
        res[b][a] += 1
        b = a
    return True

def _flow(g: Graph, s: int, t: int, cutoff: Optional[int]):
    res = _split_network(g, s, t)
    value = 0
    while (cutoff is None or value < cutoff) and _augment(res, 2*s+1, 2*t):
        value += 1
    return value, res

def local_connectivity(g: Graph, s: int, t: int, cutoff: Optional[int] = None) ->  int:
    """The maximum number of internally disjoint s–t paths, for distinct non-adjacent s and t.

    By Menger's theorem this is the size of a minimum s–t vertex separator. Computed as a unit
    capacity maximum flow on the vertex-split graph.

    :param cutoff: Stop augmenting once this many paths are found.
    """
    if s == t or g.has_edge(s, t):
        raise GraphException("Local connectivity needs distinct non-adjacent vertices, got %d and %d" % (s, t))
    return _flow(g, s, t, cutoff)[0]

def _candidate_pairs(g: Graph):
    """The pairs whose local connectivities have κ(G) as their minimum, for non-complete G.

    With ``v`` a vertex of minimum degree these are ``(v, w)`` for every non-neighbor ``w`` and every
    non-adjacent pair inside ``N(v)``.
    """
    degrees = g.degrees()
    v = degrees.index(min(degrees))
    nv = g.neighbors(v)
    for w in range(g.order):
        if w != v and not g.has_edge(v, w):
            yield v, w
    for x, y in combinations(nv, 2):
        if not g.has_edge(x, y):
            yield x, y

def vertex_connectivity(g: Graph) ->  int:
    """κ(G): n-1 for complete graphs, else the size of a minimum vertex cut.

    0 for disconnected graphs and for the graph of order 1.
    """
    if g.order == 0:
        raise GraphException("The connectivity of the empty graph is undefined")
    n = g.order
    if g.size() == n*(n-1)//2:
        return n - 1
    elif not g.is_connected():
        return 0
    best = g.min_degree()
    for s, t in _candidate_pairs(g):
        best = min(best, _flow(g, s, t, best)[0])
    return best

def minimum_vertex_cut(g: Graph) ->  Optional[Tuple[int, ...]]:
    """A minimum separating vertex set, or None for complete graphs (which have none)."""
    n = g.order
    if n == 0:
        raise GraphException("The connectivity of the empty graph is undefined")
    elif g.size() == n*(n-1)//2:
        return None
    elif not g.is_connected():
        return ()
    best, pair = n, None
    for s, t in _candidate_pairs(g):
        value = _flow(g, s, t, best)[0]
        if value < best:
            best, pair = value, (s, t)
    s, t = pair
    _, res = _flow(g, s, t, None)
    reach = {2*s+1}
    queue = deque(reach)
    while queue:
        a = queue.popleft()
        for b, c in res[a].items():
            if c and b not in reach:
                reach.add(b)
                queue.append(b)
    return tuple(v for v in range(n) if 2*v in reach and 2*v+1 not in reach)

def is_k_connected(g: Graph, k: int) ->  bool:
    """Whether |G| > k and κ(G) >= k.

    Exits early when δ(G) < k and stops each flow computation after ``k`` paths.
    """
    if k < 0:
        raise ValueError("k must be nonnegative, got %d" % k)
    n = g.order
    if n <= k:
        return False
    elif k == 0:
        return True
    elif g.min_degree() < k:
        return False
    elif not g.is_connected():
        return False
    elif k == 1 or g.size() == n*(n-1)//2:
        return True
    return all(_flow(g, s, t, k)[0] >= k for s, t in _candidate_pairs(g))

@dataclass(frozen=True)
class BlockDecomposition:
    """The blocks and cut vertices of a connected graph.

    Blocks are maximal 2-connected subgraphs or bridges (order-2 blocks), each given as a sorted
    vertex tuple; blocks are sorted lexicographically. ``block_order_histogram`` maps each block
    order ``m_i`` to the number ``t_i`` of blocks of that order.
    """
    order: int
    blocks: Tuple[Tuple[int, ...], ...]
    cut_vertices: Tuple[int, ...]
    block_order_histogram: Dict[int, int] = field(default_factory=dict)

    def block_count(self, m: int) ->  int:
        """t_m: the number of blocks of order ``m``."""
        return self.block_order_histogram.get(m, 0)

    def blocks_containing(self, v: int) ->  List[Tuple[int, ...]]:
        return [b for b in self.blocks if v in b]

    def end_blocks(self) ->  List[Tuple[int, ...]]:
        """Blocks containing at most one cut vertex (leaves of the block–cutpoint tree)."""
        cuts = set(self.cut_vertices)
        return [b for b in self.blocks if len(cuts.intersection(b)) <= 1]

    def block_cut_tree(self) ->  Graph:
        """The block–cutpoint graph: vertices ``0..B-1`` are the blocks, ``B..`` the cut vertices."""
        nb = len(self.blocks)
        index = {c: nb + i for i, c in enumerate(self.cut_vertices)}
        edges = [(i, index[c]) for i, b in enumerate(self.blocks) for c in b if c in index]
        return make_graph(nb + len(self.cut_vertices), edges)

def block_decomposition(g: Graph) ->  BlockDecomposition:
    """Find the blocks and cut vertices of a connected graph.

    Single low-point depth-first pass with an explicit edge stack.
    """
    if not g.is_connected():
        raise GraphException("Block decomposition needs a connected graph")
    n = g.order
    disc = [-1]*n
    low = [0]*n
    edge_stack: List[Tuple[int, int]] = []
    blocks = []

    disc[0] = low[0] = 0
    clock = 1
    stack = [(0, -1, iter(g.neighbors(0)))]
    while stack:
        v, p, it = stack[-1]
        for u in it:
            if disc[u] == -1:
                edge_stack.append((v, u))
                disc[u] = low[u] = clock
                clock += 1
                stack.append((u, v, iter(g.neighbors(u))))
                break
            elif u != p and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
        else:
            stack.pop()
            if not stack:
                break
            w = stack[-1][0]
            low[w] = min(low[w], low[v])
            if low[v] >= disc[w]:
                ## w separates v's subtree: everything stacked since (w, v) is one block
                comp = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (w, v):
                        break
                blocks.append(tuple(sorted(comp)))

    blocks.sort()
    count = Counter(v for b in blocks for v in b)
    cut_vertices = tuple(sorted(v for v, c in count.items() if c >= 2))
    histogram = dict(sorted(Counter(len(b) for b in blocks).items()))
    return BlockDecomposition(n, tuple(blocks), cut_vertices, histogram)
