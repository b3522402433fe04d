"""The extremal families and the dispatcher to the minimum-size construction for each k."""

from dataclasses import dataclass
import logging
from typing import Optional, Union

from .. import settings
from ..base import Graph, UnsupportedException, VerificationException, complete_graph, join, matching_graph
from ..connectivity import is_k_connected
from ..constants import Context, GadgetName
from ..formulas import MIN_ORDER, f
from ..oracle.progress import ProgressCallback
from ..properties import is_locally_nonforesty
from .gadgets import GadgetCatalog, assemble, gadget_for, get_gadget
from .harary import harary

@dataclass(frozen=True)
class ConstructionParams:
    """The family member of connectivity ``k`` and order ``n = 4·block_count + residue``."""
    k: int
    n: int

    def __post_init__(self):
        if self.k in (3, 5):
            raise UnsupportedException("No construction is available for k=%d" % self.k)
        elif self.k not in (1, 2, 4):
            raise ValueError("The block families exist for k in (1, 2, 4), got %d" % self.k)
        elif self.n < MIN_ORDER:
            raise ValueError("The block families need n >= %d, got %d" % (MIN_ORDER, self.n))

    @property
    def block_count(self) ->  int:
        return self.n // 4

    @property
    def residue(self) ->  int:
        return self.n % 4

    @property
    def gadget(self) ->  GadgetName:
        return gadget_for(self.k, self.n)

    @property
    def context(self) ->  Context:
        return Context.for_k(self.k)

def _verify(g: Graph, k: int, n: int) ->  None:
    if g.order != n:
        raise VerificationException("Built a graph of order %d instead of %d" % (g.order, n), graph=g)
    elif g.size() != f(k, n):
        raise VerificationException("Built a graph of size %d instead of f(%d, %d) = %d" % (g.size(), k, n, f(k, n)), graph=g)
    elif not is_locally_nonforesty(g):
        raise VerificationException("Built graph for k=%d, n=%d is not locally nonforesty" % (k, n), graph=g)
    elif not is_k_connected(g, k):
        raise VerificationException("Built graph for k=%d, n=%d is not %d-connected" % (k, n, k), graph=g)

def build_extremal(
    k: int,
    n: int,
    catalog: Union[GadgetCatalog, str, None] = settings.GADGET_CATALOG,
    progress: Optional[ProgressCallback] = None,
) ->  Graph:
    """Build the k-connected locally nonforesty graph of order ``n`` and size ``f(k, n)``.

    The result is checked before it is returned.

    :param k: 1, 2 or 4.
    :param n: The order, at least 8.
    :param catalog: Where recovered gadgets are cached; see :func:`get_gadget`.
    :param progress: Progress callback for a gadget search, if one is needed.
    :raises UnsupportedException: For k=3 and k=5.
    :raises VerificationException: If the built graph fails its checks.
    """
    params = ConstructionParams(k, n)
    gadget = get_gadget(params.gadget, params.context, catalog, progress=progress)
    g = assemble(gadget, k, params.block_count)
    _verify(g, k, n)
    logging.info("Built G_%d for k=%d with gadget %s" % (n, k, params.gadget.value))
    return g

def join_family(n: int) ->  Graph:
    """K₂ ∨ ((n-2)/2)·K₂, the 2-connected locally nonforesty graph of size 5n/2 - 4.

    The two join vertices are 0 and 1.
    """
    if n < 4 or n % 2:
        raise ValueError("The join family needs an even order >= 4, got %d" % n)
    return join(complete_graph(2), matching_graph((n-2)//2))

def minimum_graph(
    k: int,
    n: int,
    catalog: Union[GadgetCatalog, str, None] = settings.GADGET_CATALOG,
    progress: Optional[ProgressCallback] = None,
) ->  Graph:
    """A minimum-size k-connected locally nonforesty graph of order ``n``.

    Block families for k in (1, 2, 4), Harary graphs for k >= 6.
    """
    if k < 1:
        raise ValueError("k must be at least 1, got %d" % k)
    elif k >= 6:
        return harary(k, n)
    return build_extremal(k, n, catalog=catalog, progress=progress)
