"""Isomorph-free enumeration of small graphs by canonical augmentation.

Graphs are grown one vertex at a time; the vertex added last is vertex ``i`` of a graph of order
``i+1``. A child is kept iff its new vertex lies in the automorphism orbit of the vertex its
canonical labeling places last (the canonical deletion), and children of one parent are
deduplicated by canonical code. Each isomorphism class is then produced by exactly one parent, so
no global store of seen graphs is needed and disjoint subtrees can be searched independently.

Any test applied to a partial graph must hold for every induced subgraph of every graph the search
is meant to find, whichever vertices are deleted; otherwise some class loses its canonical
ancestor. The tests used here are:

- max degree: a subgraph never has a larger degree;
- edge budget: a subgraph never has more edges;
- min degree look-ahead (only with ``lookahead``): with ``r`` vertices still to come a vertex of
  degree ``d`` ends with degree at most ``d + r``; the ``r`` future vertices need at least
  ``r·δ`` edge endpoints, at most ``r-1`` each among themselves, which bounds both the edges
  still to be added and the spare degree the present vertices must offer.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

from .. import settings
from ..base import Graph, mask_of
from ..connectivity import is_k_connected
from ..constants import LocalPredicate, SearchStage
from ..properties import is_locally_c3_plus_k1, is_locally_nonforesty
from .canon import CanonicalForm, canonical_form, same_orbit
from .progress import ProgressCallback, ProgressReporter

_PREDICATES = {
    LocalPredicate.NoPredicate: lambda g: True,
    LocalPredicate.LocallyNonforesty: is_locally_nonforesty,
    LocalPredicate.LocalC3PlusK1: is_locally_c3_plus_k1,
}

@dataclass(frozen=True)
class EnumerationSpec:
    """What to enumerate.

    :param order: The order of the graphs; at most ``cap``.
    :param max_edges: The edge budget (size at most this); None for no budget.
    :param min_degree_final: The minimum degree required of a completed graph.
    :param max_degree: The maximum degree, enforced during generation; None for no cap.
    :param connectivity_requirement: Completed graphs must be k-connected for this k (0 for none).
    :param local_predicate: The local condition completed graphs must satisfy.
    :param cap: The largest accepted order.
    """
    order: int
    max_edges: Optional[int] = None
    min_degree_final: int = 0
    max_degree: Optional[int] = None
    connectivity_requirement: int = 0
    local_predicate: LocalPredicate = LocalPredicate.NoPredicate
    cap: int = settings.ORACLE_ORDER_CAP

    def __post_init__(self):
        n = self.order
        if n < 0:
            raise ValueError("Order must be nonnegative, got %d" % n)
        elif n > min(self.cap, settings.ORACLE_ORDER_CAP):
            raise ValueError("Order %d exceeds the enumeration cap of %d" % (n, min(self.cap, settings.ORACLE_ORDER_CAP)))
        elif self.max_edges is not None and not 0 <= self.max_edges <= n*(n-1)//2:
            raise ValueError("max_edges must lie in [0, %d], got %d" % (n*(n-1)//2, self.max_edges))
        elif self.max_degree is not None and self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative, got %d" % self.max_degree)
        elif self.min_degree_final < 0 or self.connectivity_requirement < 0:
            raise ValueError("Degree and connectivity requirements must be nonnegative")

    @property
    def budget(self) ->  int:
        return self.order*(self.order-1)//2 if self.max_edges is None else self.max_edges

    @property
    def degree_cap(self) ->  int:
        full = max(self.order - 1, 0)
        return full if self.max_degree is None else min(self.max_degree, full)

class Enumerator:
    """The canonical augmentation search for one :class:`EnumerationSpec`.

    ``examined`` counts the completed labeled candidates handed to the final predicates; it only
    depends on the spec and ``lookahead``, not on how the tree is split.

    :param spec: What to enumerate.
    :param lookahead: Whether to prune partial graphs by ``min_degree_final``. When False the
                      minimum degree is only checked on completed graphs.
    """
    def __init__(self, spec: EnumerationSpec, lookahead: bool = True):
        self.spec = spec
        self.lookahead = lookahead
        self.delta = spec.min_degree_final if lookahead else 0
        self.examined = 0

    def _feasible(self, rows: Sequence[int], e: int, r: int) ->  bool:
        if not self.lookahead or not self.delta:
            return True
        delta, cap = self.delta, self.spec.degree_cap
        degs = [x.bit_count() for x in rows]
        deficit = sum(max(0, delta - d) for d in degs)
        if r == 0:
            return deficit == 0
        need = max(deficit, -(-(r*delta + deficit) // 2))
        if e + need > self.spec.budget:
            return False
        elif deficit > r*min(cap, len(rows)):
            return False
        ## Each future vertex has at least delta-(r-1) neighbors among the present ones
        return sum(cap - d for d in degs) >= r*max(0, delta - r + 1)

    def _completed(self, g: Graph) ->  bool:
        spec = self.spec
        self.examined += 1
        if g.min_degree() < spec.min_degree_final:
            return False
        elif not _PREDICATES[spec.local_predicate](g):
            return False
        elif spec.connectivity_requirement and not is_k_connected(g, spec.connectivity_requirement):
            return False
        return True

    def _accepted(self, child: Graph, form: CanonicalForm) ->  bool:
        v = child.order - 1
        c = form.labeling[-1]
        return c == v or same_orbit(child, v, c, form)

    def children(self, g: Graph) ->  List[Graph]:
        """The accepted one-vertex extensions of ``g``, in a fixed order."""
        spec = self.spec
        n, i = spec.order, g.order
        rows = g.rows
        degs = g.degrees()
        e = g.size()
        r = n - i - 1
        cap = spec.degree_cap

        required = allowed = 0
        for u in range(i):
            if degs[u] + r < self.delta:
                required |= 1 << u
            if degs[u] < cap:
                allowed |= 1 << u
        if required & ~allowed:
            return []
        optional = [u for u in range(i) if allowed >> u & 1 and not required >> u & 1]
        nreq = required.bit_count()
        lo = max(nreq, self.delta - r, 0)
        hi = min(cap, nreq + len(optional), spec.budget - e)

        out = []
        seen = set()
        bit = 1 << i
        for size in range(lo, hi+1):
            for extra in combinations(optional, size - nreq):
                s = required | mask_of(extra)
                child_rows = [row | bit if s >> u & 1 else row for u, row in enumerate(rows)]
                child_rows.append(s)
                if not self._feasible(child_rows, e + size, r):
                    continue
                child = Graph(i+1, child_rows)
                if r == 0 and not self._completed(child):
                    continue
                form = canonical_form(child)
                if form.code in seen or not self._accepted(child, form):
                    continue
                seen.add(form.code)
                out.append(child)
        return out

    def roots(self) ->  List[Graph]:
        root = Graph(0)
        if self.spec.order == 0:
            return [root] if self._completed(root) else []
        return [root]

    def walk(self, g: Graph) ->  Iterator[Graph]:
        """Yield the completed graphs in the subtree below ``g``, depth first."""
        if g.order == self.spec.order:
            yield g
            return
        for child in self.children(g):
            yield from self.walk(child)

    def frontier(self, depth: int) ->  List[Graph]:
        """The nodes of order ``depth`` (or completed graphs, if shallower), in depth-first order."""
        level = self.roots()
        for _ in range(min(depth, self.spec.order)):
            level = [c for g in level for c in self.children(g)]
        return level

def _search_subtree(spec: EnumerationSpec, lookahead: bool, order: int, rows: Tuple[int, ...]):
    en = Enumerator(spec, lookahead)
    found = [g.rows for g in en.walk(Graph(order, rows))]
    return en.examined, found

class EnumerationResult:
    """Counters of a finished enumeration."""
    def __init__(self, count: int, examined: int, subtrees: int):
        self.count = count
        self.examined = examined
        self.subtrees = subtrees

    def __repr__(self):
        return "EnumerationResult(count=%d, examined=%d, subtrees=%d)" % (self.count, self.examined, self.subtrees)

def run_enumeration(
    spec: EnumerationSpec,
    visitor: Callable[[Graph], None],
    jobs: int = 1,
    progress: Optional[ProgressCallback] = None,
    lookahead: bool = True,
    split_depth: int = settings.SPLIT_DEPTH,
    period: float = 0.2,
) ->  EnumerationResult:
    """Run the enumeration and return its counters; see :func:`enumerate_graphs`."""
    if jobs < 1:
        raise ValueError("jobs must be at least 1, got %d" % jobs)
    if progress is None:
        progress = lambda stage, fraction, detail: None
    progress(SearchStage.Initial, 0, "Starting")

    en = Enumerator(spec, lookahead)
    progress(SearchStage.Split, 0, "Splitting at depth %d" % split_depth)
    frontier = en.frontier(split_depth)
    logging.info("Order %d: %d subtrees at depth %d" % (spec.order, len(frontier), min(split_depth, spec.order)))

    count = 0
    examined = en.examined
    pr = ProgressReporter(len(frontier), "Subtrees", progress, SearchStage.Search, period=period)
    if jobs == 1:
        for node in frontier:
            sub = Enumerator(spec, lookahead)
            for g in sub.walk(node):
                visitor(g)
                count += 1
            examined += sub.examined
            pr()
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [executor.submit(_search_subtree, spec, lookahead, g.order, g.rows) for g in frontier]
            ## Consume in submission order so visitors see the sequential order
            for future in futures:
                sub_examined, found = future.result()
                examined += sub_examined
                for rows in found:
                    visitor(Graph(spec.order, rows))
                    count += 1
                pr()

    progress(SearchStage.Merge, 1, "Merged %d subtrees" % len(frontier))
    progress(SearchStage.Done, 1, "%d graphs" % count)
    logging.info("Order %d: %d classes, %d candidates examined" % (spec.order, count, examined))
    return EnumerationResult(count, examined, len(frontier))

def enumerate_graphs(
    spec: EnumerationSpec,
    visitor: Callable[[Graph], None],
    jobs: int = 1,
    progress: Optional[ProgressCallback] = None,
) ->  int:
    """Call ``visitor`` once for each isomorphism class meeting ``spec``.

    One representative per class is passed, in a deterministic order independent of ``jobs``.

    :param spec: What to enumerate.
    :param visitor: Called with each representative.
    :param jobs: The number of worker processes.
    :param progress: Progress callback ``progress(stage, fraction, detail)``.
    :returns: The number of classes.
    """
    return run_enumeration(spec, visitor, jobs=jobs, progress=progress).count

def iter_graphs(spec: EnumerationSpec, lookahead: bool = True) ->  Iterator[Graph]:
    """Yield one representative of each class meeting ``spec``, in the order of :func:`enumerate_graphs`."""
    en = Enumerator(spec, lookahead)
    for root in en.roots():
        yield from en.walk(root)

def count_graphs(spec: EnumerationSpec, jobs: int = 1) ->  int:
    return enumerate_graphs(spec, lambda g: None, jobs=jobs)
