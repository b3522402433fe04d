"""Local subgraphs and the locally foresty / locally nonforesty predicates.

The local subgraph ``L(v)`` of a vertex is the subgraph induced by its open neighborhood ``N(v)``.
A graph is *locally nonforesty* if every local subgraph contains a cycle and *locally foresty* if
every local subgraph is a forest. The two are not complements of each other: a wheel ``K₁ ∨ C₆``
is neither.

Two independent implementations of the cycle test are kept on purpose:
:func:`is_locally_nonforesty` compares edge and component counts inside ``N(v)`` while
:func:`wheel_hubs` searches for an explicit cycle, so each can serve as an oracle for the other.
"""

from collections import Counter
from typing import Dict, FrozenSet, List, Optional

from .base import Graph, induced_subgraph, iter_bits

def local_subgraph(g: Graph, v: int) ->  Graph:
    """L(v) = G[N(v)], relabeled order-preservingly."""
    return induced_subgraph(g, g.neighbors(v))

def _count_components(rows, mask: int) ->  int:
    count = 0
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= rows[u]
            frontier = nxt & mask & ~comp
            comp |= frontier
        mask &= ~comp
        count += 1
    return count

def _induced_is_forest(rows, mask: int) ->  bool:
    edges = sum((rows[u] & mask).bit_count() for u in iter_bits(mask)) // 2
    return edges == mask.bit_count() - _count_components(rows, mask)

def is_forest(g: Graph) ->  bool:
    """Whether ``g`` is acyclic, i.e. e(G) = |G| - (number of components)."""
    return _induced_is_forest(g.rows, (1 << g.order) - 1)

def is_locally_nonforesty(g: Graph) ->  bool:
    """Whether every local subgraph contains a cycle (vacuously true on the empty graph).

    A vertex of degree 0 has the empty graph as local subgraph, which is a forest.
    """
    rows = g.rows
    return all(not _induced_is_forest(rows, rows[v]) for v in range(g.order))

def is_locally_foresty(g: Graph) ->  bool:
    """Whether every local subgraph is a forest (vacuously true on the empty graph)."""
    rows = g.rows
    return all(_induced_is_forest(rows, rows[v]) for v in range(g.order))

def has_cycle(g: Graph) ->  Optional[List[int]]:
    """Find a cycle by depth-first search.

    :returns: The vertices of some cycle in traversal order, or None if ``g`` is a forest.
    """
    parent: Dict[int, int] = {}
    for root in range(g.order):
        if root in parent:
            continue
        parent[root] = -1
        stack = [(root, iter(g.neighbors(root)))]
        while stack:
            v, it = stack[-1]
            for u in it:
                if u == parent[v]:
                    continue
                if u in parent:
                    ## Back edge: u is an ancestor of v on the stack
                    cycle = [v]
                    while cycle[-1] != u:
                        cycle.append(parent[cycle[-1]])
                    return cycle[::-1]
                parent[u] = v
                stack.append((u, iter(g.neighbors(u))))
                break
            else:
                stack.pop()
    return None

def wheel_hubs(g: Graph) ->  FrozenSet[int]:
    """The vertices that are the hub of some wheel in ``g``.

    ``v`` is a hub iff a cycle exists inside ``N(v)``; the cycle and ``v`` then span a wheel.
    """
    return frozenset(v for v in range(g.order) if has_cycle(local_subgraph(g, v)) is not None)

def _is_c3_plus_k1(h: Graph) ->  bool:
    return h.order == 4 and sorted(h.degrees()) == [0, 2, 2, 2]

def is_locally_c3_plus_k1(g: Graph) ->  bool:
    """Whether every local subgraph is isomorphic to C₃+K₁ (a triangle plus an isolated vertex)."""
    return all(_is_c3_plus_k1(local_subgraph(g, v)) for v in range(g.order))

def local_subgraph_census(g: Graph) ->  Dict[str, int]:
    """Count the local subgraphs of ``g`` by isomorphism class.

    :returns: A mapping from the canonical graph6 string of each class to the number of vertices
              whose local subgraph lies in it.
    """
    from .oracle.canon import canonical_graph6

    return dict(Counter(canonical_graph6(local_subgraph(g, v)) for v in range(g.order)))
