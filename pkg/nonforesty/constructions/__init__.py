"""Constructions of minimum-size k-connected locally nonforesty graphs."""

from .gadgets import (
    Gadget, GadgetCatalog, GADGET_SHAPES, assemble, gadget_for, get_gadget, parse_catalog, search_gadget, validate_gadget,
)
from .families import ConstructionParams, build_extremal, join_family, minimum_graph
from .harary import harary
