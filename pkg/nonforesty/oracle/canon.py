"""Canonical forms of small graphs.

Equitable partition refinement plus individualization, searching the tree of discrete partitions
for the labeling whose adjacency encoding is lexicographically smallest. The encoding is the
upper triangle in graph6 order (``(0,1), (0,2), (1,2), (0,3), ...``) read as a binary number with
the first pair most significant, so the smallest encoding is also the smallest graph6 string.

Two prunings keep symmetric graphs cheap:

- when a leaf reproduces the best encoding the two labelings differ by an automorphism; the
  search jumps back to the level where the two paths diverge, since the rest of the current
  subtree is the image of one already explored;
- the automorphisms found so far that fix the current path pointwise are used to skip children
  in an orbit of an explored child.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ..base import Graph, GraphException, mask_of
from ..codec.graph6 import _encode_order

Cells = List[Tuple[int, ...]]

def refine(rows: Sequence[int], cells: Sequence[Sequence[int]]) ->  Cells:
    """Refine an ordered partition to the coarsest equitable partition finer than it.

    Cells are split by the number of neighbors their vertices have in a splitter cell; fragments
    replace the split cell in place, ordered by increasing count. The result only depends on the
    graph and the partition up to isomorphism.
    """
    n = sum(len(c) for c in cells)
    cells = [tuple(c) for c in cells]
    queue = [mask_of(c) for c in cells]
    pending = set(queue)
    while queue and len(cells) < n:
        smask = queue.pop(0)
        pending.discard(smask)
        out: Cells = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: Dict[int, List[int]] = {}
            for v in c:
                groups.setdefault((rows[v] & smask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            frags = [tuple(groups[k]) for k in sorted(groups)]
            out.extend(frags)
            cmask = mask_of(c)
            if cmask in pending:
                pending.discard(cmask)
                queue.remove(cmask)
                skip = None
            else:
                ## The parent cell already served as a splitter, so its largest fragment is redundant
                skip = max(range(len(frags)), key=lambda i: len(frags[i]))
            for i, frag in enumerate(frags):
                if i != skip:
                    m = mask_of(frag)
                    queue.append(m)
                    pending.add(m)
        cells = out
    return cells

def encode(rows: Sequence[int], lab: Sequence[int]) ->  int:
    """The adjacency encoding of the graph relabeled so that ``lab[i]`` becomes vertex ``i``."""
    code = 0
    for j in range(1, len(lab)):
        rj = rows[lab[j]]
        for i in range(j):
            code = (code << 1) | (rj >> lab[i] & 1)
    return code

def code_to_graph6(n: int, code: int) ->  str:
    """The graph6 string of the graph on ``n`` vertices with the given encoding."""
    nbits = n*(n-1)//2
    pad = -nbits % 6
    code <<= pad
    nchars = (nbits + pad)//6
    body = ''.join(chr((code >> 6*(nchars - 1 - i) & 63) + 63) for i in range(nchars))
    return _encode_order(n) + body

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.parent[max(a, b)] = min(a, b)

def _orbits(n: int, generators: Sequence[Sequence[int]]) ->  _UnionFind:
    uf = _UnionFind(n)
    for gamma in generators:
        for v, w in enumerate(gamma):
            uf.union(v, w)
    return uf

@dataclass(frozen=True)
class CanonicalForm:
    """The result of a canonical labeling.

    ``labeling[i]`` is the vertex of the input that the canonical graph calls ``i``. Two graphs
    (with the same initial partition shape) are isomorphic iff their codes are equal.
    """
    order: int
    code: int
    labeling: Tuple[int, ...]
    root_cells: Tuple[Tuple[int, ...], ...]
    generators: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def graph6(self) ->  str:
        return code_to_graph6(self.order, self.code)

    def graph(self, g: Graph) ->  Graph:
        """The canonical relabeling of ``g`` (the graph this form was computed from)."""
        perm = [0]*self.order
        for i, v in enumerate(self.labeling):
            perm[v] = i
        return g.relabel(perm)

    def cell_index(self, v: int) ->  int:
        """Index of the cell of ``v`` in the equitable refinement of the initial partition."""
        for i, c in enumerate(self.root_cells):
            if v in c:
                return i
        raise GraphException("Vertex %d out of range" % v, vertex=v)

    def known_same_orbit(self, u: int, v: int) ->  bool:
        """Whether the automorphisms found during the search map ``u`` to ``v``.

        A False answer is inconclusive: the automorphisms found need not generate the whole group.
        """
        uf = _orbits(self.order, self.generators)
        return uf.find(u) == uf.find(v)

class _Search:
    def __init__(self, rows: Sequence[int], n: int):
        self.rows = rows
        self.n = n
        self.best: Optional[Tuple[int, List[int], Tuple[int, ...]]] = None
        self.first: Optional[Tuple[int, List[int], Tuple[int, ...]]] = None
        self.autos: List[Tuple[int, ...]] = []

    def visit(self, cells: Cells, path: Tuple[int, ...]) ->  int:
        """Explore the subtree below ``cells``; returns the depth the search should resume at."""
        if len(cells) == self.n:
            return self.leaf(cells, path)
        depth = len(path)
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        cell = cells[idx]
        done: List[int] = []
        for v in cell:
            if done and self.pruned(v, done, path):
                continue
            done.append(v)
            new = cells[:idx] + [(v,), tuple(u for u in cell if u != v)] + cells[idx+1:]
            back = self.visit(refine(self.rows, new), path + (v,))
            if back < depth:
                return back
        return depth

    def pruned(self, v: int, done: List[int], path: Tuple[int, ...]) ->  bool:
        gens = [a for a in self.autos if all(a[x] == x for x in path)]
        if not gens:
            return False
        uf = _orbits(self.n, gens)
        root = uf.find(v)
        return any(uf.find(u) == root for u in done)

    def leaf(self, cells: Cells, path: Tuple[int, ...]) ->  int:
        lab = [c[0] for c in cells]
        code = encode(self.rows, lab)
        if self.first is None:
            self.first = self.best = (code, lab, path)
            return len(path)
        for ref in (self.first, self.best):
            if code == ref[0]:
                gamma = [0]*self.n
                for a, b in zip(ref[1], lab):
                    gamma[a] = b
                self.autos.append(tuple(gamma))
                d = 0
                while d < len(path) and path[d] == ref[2][d]:
                    d += 1
                return d
        if code < self.best[0]:
            self.best = (code, lab, path)
        return len(path)

def canonical_form(g: Graph, partition: Optional[Sequence[Sequence[int]]] = None) ->  CanonicalForm:
    """Compute the canonical form of ``g``, optionally of ``g`` with ordered vertex colours.

    :param g: The graph; order at most 64.
    :param partition: An ordered partition of the vertices (colour classes). Defaults to a single
                      cell. Isomorphisms are required to preserve the cells and their order.
    """
    n = g.order
    if n > 64:
        raise GraphException("Canonical forms are limited to order 64, got %d" % n)
    if partition is None:
        partition = [tuple(range(n))] if n else []
    elif sorted(v for c in partition for v in c) != list(range(n)):
        raise GraphException("Not a partition of the vertices")
    root = refine(g.rows, [c for c in partition if c])
    search = _Search(g.rows, n)
    if n:
        search.visit(root, ())
        code, lab, _ = search.best
    else:
        code, lab = 0, []
    return CanonicalForm(n, code, tuple(lab), tuple(root), tuple(search.autos))

def canonical_graph6(g: Graph) ->  str:
    """The graph6 string of the canonical relabeling of ``g``."""
    return canonical_form(g).graph6

def canonical_graph(g: Graph) ->  Graph:
    return canonical_form(g).graph(g)

def are_isomorphic(g: Graph, h: Graph) ->  bool:
    if g.order != h.order or g.size() != h.size() or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).code == canonical_form(h).code

def same_orbit(g: Graph, u: int, v: int, form: Optional[CanonicalForm] = None) ->  bool:
    """Whether some automorphism of ``g`` maps ``u`` to ``v``.

    :param form: The canonical form of ``g``, if already computed; used for quick answers.
    """
    if u == v:
        return True
    if form is not None:
        if form.cell_index(u) != form.cell_index(v):
            return False
        elif form.known_same_orbit(u, v):
            return True
    rest_u = [x for x in range(g.order) if x != u]
    rest_v = [x for x in range(g.order) if x != v]
    return canonical_form(g, [(u,), rest_u]).code == canonical_form(g, [(v,), rest_v]).code
