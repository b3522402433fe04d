"""Isomorph-free enumeration of small graphs and the certificates built on it."""

from .canon import CanonicalForm, canonical_form, canonical_graph, canonical_graph6, are_isomorphic, same_orbit
from .enumerate import EnumerationSpec, Enumerator, enumerate_graphs, iter_graphs, count_graphs, run_enumeration
from .certify import MinimalityReport, verify_minimality, lemma1_scan
from .progress import ProgressReporter
