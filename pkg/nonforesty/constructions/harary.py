"""Harary graphs, the minimum-size k-connected graphs."""

from ..base import Graph, make_graph

def harary(k: int, n: int) ->  Graph:
    """The Harary graph H_{k,n} on the vertices ``0..n-1``, with ⌈kn/2⌉ edges and κ = k.

    Vertex ``i`` is joined to ``i±1, ..., i±⌊k/2⌋`` (mod n). For odd k it is also joined to
    ``i + n/2`` when n is even; when n is odd, vertex ``i`` is joined to ``i + (n+1)/2`` for
    ``0 <= i <= (n-1)/2``, so vertex 0 receives two such edges.

    For k >= 6 the jumps 1, 2 and 3 put a triangle in every local subgraph, so the graph is
    locally nonforesty.

    :param k: The connectivity, at least 2.
    :param n: The order, greater than k.
    """
    if k < 2:
        raise ValueError("Harary graphs are defined here for k >= 2, got %d" % k)
    elif n <= k:
        raise ValueError("H_{k,n} needs n > k, got k=%d, n=%d" % (k, n))
    r = k // 2
    edges = [(i, (i + j) % n) for j in range(1, r+1) for i in range(n)]
    if k % 2:
        if n % 2 == 0:
            edges += [(i, i + n//2) for i in range(n//2)]
        else:
            edges += [(i, (i + (n+1)//2) % n) for i in range((n+1)//2)]
    return make_graph(n, edges)
