"""The graph6 interchange format.

Encoding and decoding of the adjacency go through :mod:`networkx`; this module converts between
networkx graphs and :class:`~nonforesty.base.Graph` and enforces the stricter input rules used
throughout the package: the order header must have its shortest form, padding bits must be zero
and the order may not exceed a cap.
"""

from typing import IO, Iterator

import networkx as nx

from .. import settings
from ..base import Graph, Graph6Exception, make_graph, mask_of

HEADER = ">>graph6<<"

def _encode_order(n: int) ->  str:
    if n <= 62:
        return chr(n + 63)
    elif n <= 258047:
        return chr(126) + ''.join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    return chr(126)*2 + ''.join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))

def _decode_order(text: str):
    """Split ``text`` into its order and data characters, rejecting non-canonical headers."""
    if text[0] != '~':
        return ord(text[0]) - 63, text[1:]
    elif len(text) >= 2 and text[1] == '~':
        if len(text) < 8:
            raise Graph6Exception("Truncated graph6 order header", text=text)
        digits, body, least = text[2:8], text[8:], 258048
    else:
        if len(text) < 4:
            raise Graph6Exception("Truncated graph6 order header", text=text)
        digits, body, least = text[1:4], text[4:], 63
    n = 0
    for ch in digits:
        n = (n << 6) | (ord(ch) - 63)
    if n < least:
        raise Graph6Exception("Order %d must use the short graph6 header" % n, text=text)
    return n, body

def to_networkx(g: Graph) ->  nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G

def from_networkx(G: nx.Graph, cap: int = settings.ORDER_CAP) ->  Graph:
    """Convert a networkx graph, numbering its nodes in sorted order."""
    index = {v: i for i, v in enumerate(sorted(G.nodes()))}
    return make_graph(len(index), ((index[u], index[v]) for u, v in G.edges()), cap=cap)

def serialize_graph6(g: Graph) ->  str:
    """Encode a graph as a graph6 string (without header or trailing newline)."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").rstrip('\n')

def parse_graph6(text: str, cap: int = settings.ORDER_CAP) ->  Graph:
    """Decode a graph6 string.

    Surrounding whitespace and an optional ``>>graph6<<`` header are ignored.

    :param text: The graph6 string.
    :param cap: The largest accepted order.
    :raises Graph6Exception: If the string is malformed.
    """
    text = text.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER):]
    if not text:
        raise Graph6Exception("Empty graph6 string", text=text)
    elif text[0] == ':':
        raise Graph6Exception("sparse6 strings are not supported", text=text)
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Exception("Character %s outside the printable range 63..126" % repr(ch), text=text)

    n, body = _decode_order(text)
    if n > cap:
        raise Graph6Exception("Order %d exceeds the cap of %d" % (n, cap), text=text)
    nbits = n*(n-1)//2
    if len(body) != (nbits + 5)//6:
        raise Graph6Exception("Expected %d data characters for order %d, got %d" % ((nbits + 5)//6, n, len(body)), text=text)
    pad = -nbits % 6
    if body and (ord(body[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Exception("Nonzero padding bits", text=text)

    try:
        G = nx.from_graph6_bytes(text.encode("ascii"))
    except (nx.NetworkXError, ValueError) as e:
        raise Graph6Exception("Malformed graph6 string: %s" % e, text=text) from e
    rows = [mask_of(G.adj[v]) for v in range(n)]
    return Graph(n, rows)

def read_graph6_lines(stream: IO[str], cap: int = settings.ORDER_CAP) ->  Iterator[Graph]:
    """Yield the graphs of a stream holding one graph6 string per line, as they are read.

    Blank lines are skipped.
    """
    for line in stream:
        line = line.strip()
        if not line:
            continue
        yield parse_graph6(line, cap=cap)
