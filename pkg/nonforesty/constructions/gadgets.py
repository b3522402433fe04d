"""The blocks of the extremal families and their recovery by search.

A family member of order ``n = 4b + r`` is a ring (k=2, k=4) or a path (k=1) of ``b`` blocks. Blocks
``2..b`` are copies of K₄; block 1 is the gadget selected by ``r``: A (= K₄), B1, C1, and D1 (k=4)
or D2 (k=1, k=2). Each block has four ports ``x, y, z, w``; consecutive blocks are linked by
``z_i y_{i+1}``, and for k=4 also by ``w_i x_{i+1}``.

The gadgets other than A are only known through their order and size, which the size formulas
force. :func:`search_gadget` recovers one by trying every graph of that shape and every port
labeling, and keeping the first whose assembled families pass the checkers. Recovered gadgets are
kept in a plain text catalog:

.. code-block:: text

   B1 k4
   5 9
   0 1
   ...
   ports 0 1 2 3

one stanza per gadget, stanzas separated by blank lines.
"""

from dataclasses import dataclass
import logging
import os
from itertools import combinations, permutations
from typing import Dict, List, Mapping, Optional, Tuple, Union

from .. import settings
from ..base import Graph, GraphException, Graph6Exception, VerificationException, complete_graph, make_graph
from ..connectivity import is_k_connected
from ..constants import Context, GadgetName, LocalPredicate, SearchStage
from ..formulas import f
from ..oracle.canon import canonical_form
from ..oracle.enumerate import EnumerationSpec, iter_graphs
from ..oracle.progress import ProgressCallback, ProgressReporter
from ..properties import is_locally_nonforesty

GADGET_SHAPES: Mapping[GadgetName, Tuple[int, int]] = {
    GadgetName.A: (4, 6),
    GadgetName.B1: (5, 9),
    GadgetName.C1: (6, 11),
    GadgetName.D1: (7, 13),
    GadgetName.D2: (7, 12),
}

PORT_NAMES = ("x", "y", "z", "w")

## Indices into (x, y, z, w) of the ports that block 1 links through
_USED_PORTS: Mapping[Context, Tuple[int, ...]] = {
    Context.K4: (0, 1, 2, 3),
    Context.K2: (1, 2),
    Context.K1: (2,),
}

@dataclass(frozen=True)
class Gadget:
    """A block of a family with its ports.

    :param name: The gadget's tag.
    :param context: The family it was validated for.
    :param graph: The block.
    :param ports: The vertices ``(x, y, z, w)``.
    """
    name: GadgetName
    context: Context
    graph: Graph
    ports: Tuple[int, int, int, int]

    def __post_init__(self):
        order, size = GADGET_SHAPES[self.name]
        if (self.graph.order, self.graph.size()) != (order, size):
            raise GraphException("Gadget %s must have order %d and size %d, got %d and %d" % (
                self.name.value, order, size, self.graph.order, self.graph.size(),
            ))
        elif len(self.ports) != 4 or len(set(self.ports)) != 4:
            raise GraphException("Gadget ports must be four distinct vertices, got %r" % (self.ports,))
        for p in self.ports:
            if not 0 <= p < order:
                raise GraphException("Port %d out of range for order %d" % (p, order), vertex=p)
        if self.name == GadgetName.A and self.ports != (0, 1, 2, 3):
            raise GraphException("Gadget A has the ports (0, 1, 2, 3)")

    @property
    def port_map(self) ->  Dict[str, int]:
        return dict(zip(PORT_NAMES, self.ports))

    def stanza(self) ->  str:
        """This gadget in the catalog format."""
        edges = self.graph.edges()
        lines = ["%s %s" % (self.name.value, self.context.value), "%d %d" % (self.graph.order, len(edges))]
        lines.extend("%d %d" % e for e in edges)
        lines.append("ports %d %d %d %d" % self.ports)
        return '\n'.join(lines) + '\n'

def gadget_k4(context: Context) ->  Gadget:
    return Gadget(GadgetName.A, context, complete_graph(4), (0, 1, 2, 3))

def gadget_for(k: int, n: int) ->  GadgetName:
    """The gadget at position 1 of the family member of order ``n``."""
    r = n % 4
    if r == 3:
        return GadgetName.D1 if k == 4 else GadgetName.D2
    return (GadgetName.A, GadgetName.B1, GadgetName.C1)[r]

def _check_context(name: GadgetName, context: Context) ->  None:
    if name == GadgetName.D1 and context != Context.K4:
        raise ValueError("D1 is only used for k=4")
    elif name == GadgetName.D2 and context == Context.K4:
        raise ValueError("D2 is only used for k=1 and k=2")

def assemble(gadget: Gadget, k: int, blocks: int) ->  Graph:
    """Put ``gadget`` at position 1 and K₄ at positions ``2..blocks``, then link the blocks.

    The gadget keeps its vertex numbers; block ``i >= 2`` takes ``|gadget| + 4(i-2) .. +3`` with
    ports in the order x, y, z, w.

    :param k: The family: 4 and 2 link the blocks cyclically (4 with two edges per link), 1 links
              them in a path.
    :param blocks: The number of blocks, at least 2.
    """
    if k not in (1, 2, 4):
        raise ValueError("The block families exist for k in (1, 2, 4), got %d" % k)
    elif blocks < 2:
        raise ValueError("A family needs at least 2 blocks, got %d" % blocks)
    base = gadget.graph.order
    edges = gadget.graph.edges()
    ports = [gadget.ports]
    for i in range(blocks - 1):
        start = base + 4*i
        edges.extend((start+u, start+v) for u, v in combinations(range(4), 2))
        ports.append((start, start+1, start+2, start+3))
    links = blocks if k in (2, 4) else blocks - 1
    for i in range(links):
        a, b = ports[i], ports[(i+1) % blocks]
        edges.append((a[2], b[1]))
        if k == 4:
            edges.append((a[3], b[0]))
    return make_graph(base + 4*(blocks-1), edges)

def validate_gadget(gadget: Gadget, block_counts: Tuple[int, ...] = settings.VALIDATION_BLOCK_COUNTS) ->  bool:
    """Whether the families assembled from ``gadget`` have the right size, are locally nonforesty
    and k-connected at each of ``block_counts``.
    """
    k = gadget.context.k
    for blocks in block_counts:
        g = assemble(gadget, k, blocks)
        if g.size() != f(k, g.order) or not is_locally_nonforesty(g) or not is_k_connected(g, k):
            return False
    return True

def search_gadget(
    name: GadgetName,
    context: Context,
    progress: Optional[ProgressCallback] = None,
    block_counts: Tuple[int, ...] = settings.VALIDATION_BLOCK_COUNTS,
) ->  Gadget:
    """Recover a gadget by exhaustive search.

    Candidates are tried in order of canonical form, and for each the port tuples in
    lexicographic order; the first gadget passing :func:`validate_gadget` is returned. Only the
    ports the family links through are checked, so each port tuple that agrees with an earlier one
    on those ports reuses its verdict.

    :raises VerificationException: If no candidate qualifies.
    """
    if name == GadgetName.A:
        return gadget_k4(context)
    _check_context(name, context)
    order, size = GADGET_SHAPES[name]
    k = context.k
    used = _USED_PORTS[context]

    ## The outside neighbor of a port lies in another block and has no other neighbor in the
    ## port's neighborhood, so every gadget vertex needs its local cycle inside the gadget.
    spec = EnumerationSpec(order=order, max_edges=size, min_degree_final=3, local_predicate=LocalPredicate.LocallyNonforesty)
    candidates = []
    for g in iter_graphs(spec):
        if g.size() == size:
            form = canonical_form(g)
            candidates.append((form.code, form.graph(g)))
    candidates.sort(key=lambda c: c[0])
    logging.info("Searching %s for k=%d: %d candidate graphs" % (name.value, k, len(candidates)))

    pr = ProgressReporter(len(candidates), "Gadget %s (k=%d)" % (name.value, k), progress, SearchStage.Search)
    for _, g in candidates:
        degrees = g.degrees()
        tried: Dict[Tuple[int, ...], bool] = {}
        for ports in permutations(range(order), 4):
            key = tuple(ports[i] for i in used)
            if key not in tried:
                linked = set(key)
                if any(d + (v in linked) < k for v, d in enumerate(degrees)):
                    tried[key] = False
                else:
                    tried[key] = validate_gadget(Gadget(name, context, g, ports), block_counts)
            if tried[key]:
                logging.info("Found %s for k=%d with ports %r" % (name.value, k, ports))
                return Gadget(name, context, g, ports)
        pr()
    raise VerificationException("No %d-vertex %d-edge gadget qualifies as %s for k=%d" % (order, size, name.value, k))

def parse_catalog(text: str) ->  List[Gadget]:
    """Parse catalog stanzas.

    :raises Graph6Exception: On malformed text.
    """
    out = []
    for chunk in text.split("\n\n"):
        lines = [l.strip() for l in chunk.strip().splitlines() if l.strip()]
        if not lines:
            continue
        try:
            tag, ctx = lines[0].split()
            n, m = map(int, lines[1].split())
            edges = [tuple(map(int, l.split())) for l in lines[2:2+m]]
            port_line = lines[2+m].split()
            if port_line[0] != "ports" or len(lines) != m + 3 or any(len(e) != 2 for e in edges):
                raise ValueError("malformed stanza")
            gadget = Gadget(GadgetName(tag), Context(ctx), make_graph(n, edges), tuple(map(int, port_line[1:])))
        except (ValueError, IndexError) as e:
            raise Graph6Exception("Malformed catalog stanza: %s" % e, text=chunk) from e
        if gadget.graph.size() != m:
            raise Graph6Exception("Stanza declares %d edges but lists %d distinct ones" % (m, gadget.graph.size()), text=chunk)
        out.append(gadget)
    return out

class GadgetCatalog:
    """Recovered gadgets persisted to a text file.

    Stanzas are validated on load; invalid ones are dropped with a warning, so that the gadget is
    searched again.

    :param path: The catalog file; it need not exist yet.
    """
    def __init__(self, path: str):
        self.path = path
        self._gadgets: Dict[Tuple[GadgetName, Context], Gadget] = {}
        self._loaded = False

    def load(self) ->  None:
        self._loaded = True
        if not os.path.exists(self.path):
            return
        with open(self.path, "r") as fp:
            text = fp.read()
        try:
            gadgets = parse_catalog(text)
        except Graph6Exception as e:
            logging.warning("Ignoring unreadable gadget catalog %s: %s" % (self.path, e))
            return
        for gadget in gadgets:
            if validate_gadget(gadget):
                self._gadgets[(gadget.name, gadget.context)] = gadget
            else:
                logging.warning("Discarding invalid catalog entry %s %s" % (gadget.name.value, gadget.context.value))

    def get(self, name: GadgetName, context: Context) ->  Optional[Gadget]:
        if not self._loaded:
            self.load()
        return self._gadgets.get((name, context))

    def put(self, gadget: Gadget) ->  None:
        if not self._loaded:
            self.load()
        self._gadgets[(gadget.name, gadget.context)] = gadget

    def save(self) ->  None:
        directory = os.path.dirname(self.path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        stanzas = [self._gadgets[key].stanza() for key in sorted(self._gadgets, key=lambda t: (t[0].value, t[1].value))]
        with open(self.path, "w") as fp:
            fp.write('\n'.join(stanzas))

    def __contains__(self, key):
        return self.get(*key) is not None

    def __len__(self):
        if not self._loaded:
            self.load()
        return len(self._gadgets)

_MEMORY: Dict[Tuple[GadgetName, Context], Gadget] = {}

def get_gadget(
    name: GadgetName,
    context: Context,
    catalog: Union[GadgetCatalog, str, None] = settings.GADGET_CATALOG,
    progress: Optional[ProgressCallback] = None,
) ->  Gadget:
    """Look a gadget up in memory, then in the catalog, then search for it.

    :param catalog: The catalog (or its path) to read and to store new gadgets in; None to keep
                    gadgets in memory only.
    """
    if name == GadgetName.A:
        return gadget_k4(context)
    _check_context(name, context)
    key = (name, context)
    if key in _MEMORY:
        return _MEMORY[key]
    if isinstance(catalog, str):
        catalog = GadgetCatalog(catalog)

    gadget = catalog.get(name, context) if catalog is not None else None
    if gadget is not None:
        logging.info("Loaded %s for k=%d from %s" % (name.value, context.k, catalog.path))
    else:
        gadget = search_gadget(name, context, progress=progress)
        if catalog is not None:
            catalog.put(gadget)
            try:
                catalog.save()
            except OSError as e:
                logging.warning("Could not write the gadget catalog %s: %s" % (catalog.path, e))
    _MEMORY[key] = gadget
    return gadget
