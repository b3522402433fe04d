from collections import defaultdict

import networkx as nx
import pytest

from nonforesty.codec import from_networkx as from_nx, to_networkx as to_nx

_ATLAS = None
def atlas():
    """Every graph of order at most 7, one per isomorphism class, grouped by order."""
    global _ATLAS
    if _ATLAS is None:
        _ATLAS = defaultdict(list)
        for G in nx.graph_atlas_g():
            _ATLAS[G.number_of_nodes()].append(from_nx(G))
    return _ATLAS

@pytest.fixture(scope="session")
def catalog(tmp_path_factory):
    """A gadget catalog file shared by the whole session."""
    return str(tmp_path_factory.mktemp("gadgets") / "gadgets.txt")
