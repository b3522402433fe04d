"""Exhaustive certification of the minimum sizes and the C₃+K₁ order condition at small orders."""

import logging
import time
from dataclasses import dataclass
from typing import Callable, List, Optional

from .. import settings
from ..base import Graph
from ..codec.graph6 import serialize_graph6
from ..constants import LocalPredicate
from ..formulas import f
from .canon import canonical_form
from .enumerate import EnumerationSpec, run_enumeration
from .progress import ProgressCallback

@dataclass(frozen=True)
class MinimalityReport:
    """The outcome of :func:`verify_minimality`.

    ``qualifying_witness`` is the canonically smallest (canonically relabeled) graph found, if any.
    ``certified`` is False only when the search was interrupted before exhausting its space.
    """
    k: int
    n: int
    budget: int
    formula_value: int
    graphs_examined: int
    qualifying_witness: Optional[Graph]
    elapsed: float
    certified: bool

    @property
    def contradicts_formula(self) ->  bool:
        """Whether the outcome disagrees with ``f(k, n)``.

        A witness smaller than the formula value, or an exhausted search finding nothing although
        the budget reaches it, would falsify the formula.
        """
        if self.qualifying_witness is not None:
            return self.qualifying_witness.size() < self.formula_value
        return self.certified and self.budget >= self.formula_value

    def as_lines(self) ->  List[str]:
        witness = self.qualifying_witness
        return [
            "k: %d" % self.k,
            "n: %d" % self.n,
            "budget: %d" % self.budget,
            "formula: %d" % self.formula_value,
            "graphs_examined: %d" % self.graphs_examined,
            "witness: %s" % (serialize_graph6(witness) if witness is not None else "none"),
            "witness_size: %s" % (witness.size() if witness is not None else "-"),
            "certified: %s" % ("true" if self.certified else "false"),
            "elapsed: %.3f" % self.elapsed,
        ]

def verify_minimality(
    k: int,
    n: int,
    budget: Optional[int] = None,
    jobs: int = 1,
    progress: Optional[ProgressCallback] = None,
    prune: bool = True,
    uncertified: bool = False,
    cap: int = settings.CERTIFIED_ORDER_CAP,
) ->  MinimalityReport:
    """Search all graphs of order ``n`` and size at most ``budget`` for a k-connected locally
    nonforesty one.

    :param k: The connectivity; one of 1, 2 or 4.
    :param n: The order; ``8 <= n <= cap``.
    :param budget: The size bound; defaults to ``f(k, n) - 1``.
    :param jobs: The number of worker processes.
    :param progress: Progress callback.
    :param prune: Whether to use the minimum degree implied by the predicates during generation.
    :param uncertified: Allow orders above ``cap`` (up to the hard enumeration cap).
    :param cap: The largest order accepted without ``uncertified``.
    """
    if k not in (1, 2, 4):
        raise ValueError("verify_minimality supports k in (1, 2, 4), got %d" % k)
    limit = settings.ORACLE_ORDER_CAP if uncertified else cap
    if not 8 <= n <= limit:
        raise ValueError("n must lie in [8, %d]%s, got %d" % (limit, "" if uncertified else " (pass uncertified to go further)", n))
    value = f(k, n)
    if budget is None:
        budget = value - 1
    elif budget < 0:
        raise ValueError("budget must be nonnegative, got %d" % budget)
    budget = min(budget, n*(n-1)//2)

    ## Locally nonforesty forces delta >= 3 (a cycle in L(v) needs 3 vertices); k-connected forces delta >= k
    spec = EnumerationSpec(
        order=n,
        max_edges=budget,
        min_degree_final=max(3, k),
        connectivity_requirement=k,
        local_predicate=LocalPredicate.LocallyNonforesty,
    )

    best = []
    def visit(g):
        form = canonical_form(g)
        if not best or form.code < best[0].code:
            best[:] = [form, g]

    logging.info("Certifying f(%d, %d) = %d: searching size <= %d" % (k, n, value, budget))
    start = time.monotonic()
    certified = True
    examined = 0
    try:
        result = run_enumeration(spec, visit, jobs=jobs, progress=progress, lookahead=prune)
        examined = result.examined
    except KeyboardInterrupt:
        logging.warning("Search for k=%d, n=%d interrupted; the result is not certified" % (k, n))
        certified = False
    elapsed = time.monotonic() - start

    witness = best[0].graph(best[1]) if best else None
    report = MinimalityReport(k, n, budget, value, examined, witness, elapsed, certified)
    if report.contradicts_formula:
        logging.error("k=%d, n=%d, budget %d: the search contradicts f(%d, %d) = %d" % (k, n, budget, k, n, value))
    else:
        logging.info("k=%d, n=%d: %s after %.1f s" % (k, n, "witness found" if witness else "no witness", elapsed))
    return report

def lemma1_scan(
    n: int,
    jobs: int = 1,
    progress: Optional[ProgressCallback] = None,
    cap: int = settings.DEGREE_BOUNDED_CAP,
    visitor: Optional[Callable[[Graph], None]] = None,
) ->  int:
    """Count the 4-regular graphs of order ``n`` in which every local subgraph is C₃+K₁.

    Such graphs only exist for orders divisible by 4.

    :param n: The order; ``5 <= n <= cap``.
    :param visitor: Called with one representative of each class found.
    """
    if not 5 <= n <= cap:
        raise ValueError("n must lie in [5, %d], got %d" % (cap, n))
    spec = EnumerationSpec(
        order=n,
        max_edges=2*n,
        min_degree_final=4,
        max_degree=4,
        local_predicate=LocalPredicate.LocalC3PlusK1,
    )
    if visitor is None:
        visitor = lambda g: None
    count = run_enumeration(spec, visitor, jobs=jobs, progress=progress).count
    logging.info("Order %d: %d graphs with every local subgraph C3+K1" % (n, count))
    return count
