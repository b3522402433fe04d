"""This module contains various constants."""

import enum

class Regime(enum.Enum):
    Connected = "connected"
    TwoConnected = "two_connected"
    FourConnected = "four_connected"
    Trivial = "trivial"

class GadgetName(enum.Enum):
    A = "A"
    B1 = "B1"
    C1 = "C1"
    D1 = "D1"
    D2 = "D2"

class Context(enum.Enum):
    """The construction family a gadget is validated for."""
    K4 = "k4"
    K2 = "k2"
    K1 = "k1"

    @property
    def k(self) -> int:
        return int(self.value[1:])

    @classmethod
    def for_k(cls, k: int) -> "Context":
        return cls("k%d" % k)

class LocalPredicate(enum.Enum):
    NoPredicate = "none"
    LocallyNonforesty = "locally_nonforesty"
    LocalC3PlusK1 = "local_eq_C3_plus_K1"

class SearchStage(enum.Enum):
    Initial = 0
    Split = 1
    Search = 2
    Merge = 3
    Done = 4
