"""Closed-form minimum sizes of k-connected locally nonforesty graphs.

``f(k, n)`` is the minimum size of a k-connected locally nonforesty graph of order ``n``. It is
``p(n)`` for k=1, ``g(n)`` for k=2, ``h(n)`` for k=4 (all for ``n >= 8``) and ``⌈kn/2⌉`` for
``k >= 5``, where local nonforestiness costs nothing beyond the degree bound. The case k=3 is
settled by a companion result and is deliberately not answered here.

All arithmetic is exact: integers for sizes and :class:`fractions.Fraction` for the bound
``m >= 7(n-1)/3`` conjectured for 3-connected locally nonforesty graphs, which the 4-connected
family refutes.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List

from .base import Graph, UnsupportedException
from .constants import Regime

MIN_ORDER = 8

@dataclass(frozen=True)
class SizeFormulaResult:
    k: int
    n: int
    value: int
    regime: Regime

def _check_order(n: int) ->  None:
    if n < MIN_ORDER:
        raise ValueError("The formulas for k <= 4 hold only for n >= %d, got n=%d" % (MIN_ORDER, n))

def h(n: int) ->  int:
    """Minimum size of a 4-connected locally nonforesty graph: 2n if 4 | n, else 2n+1."""
    _check_order(n)
    return 2*n if n % 4 == 0 else 2*n + 1

def _g_blocks(n: int) ->  int:
    ## n = 4k + r form: 7k+2r for r in (0, 3), 7k+2r+1 for r in (1, 2)
    k, r = divmod(n, 4)
    return 7*k + 2*r + (0 if r in (0, 3) else 1)

def g(n: int) ->  int:
    """Minimum size of a 2-connected locally nonforesty graph.

    ``2n - ⌊n/4⌋`` if n ≡ 0, 3 (mod 4), else ``2n + 1 - ⌊n/4⌋``.
    """
    _check_order(n)
    value = 2*n - n//4 + (0 if n % 4 in (0, 3) else 1)
    assert value == _g_blocks(n), "g(%d): floor form and block form disagree" % n
    return value

def p(n: int) ->  int:
    """Minimum size of a connected locally nonforesty graph.

    ``2n - 1 - ⌊n/4⌋`` if n ≡ 0, 3 (mod 4), else ``2n - ⌊n/4⌋``.
    """
    _check_order(n)
    value = 2*n - 1 - n//4 + (0 if n % 4 in (0, 3) else 1)
    assert value == _g_blocks(n) - 1, "p(%d): floor form and block form disagree" % n
    return value

def degree_bound(k: int, n: int) ->  int:
    """⌈kn/2⌉, the size forced by δ >= k alone."""
    return -(-k*n // 2)

_REGIMES: Dict[int, Callable[[int], SizeFormulaResult]] = {}
def _register(k: int) ->  Callable:
    """Register the formula for a connectivity value."""
    def reg_inner(f: Callable[[int], SizeFormulaResult]) ->  Callable[[int], SizeFormulaResult]:
        if k in _REGIMES:
            raise ValueError("Already registered a formula for k=%d" % k)
        _REGIMES[k] = f
        return f
    return reg_inner

@_register(1)
def _connected(n):
    return SizeFormulaResult(1, n, p(n), Regime.Connected)

@_register(2)
def _two_connected(n):
    return SizeFormulaResult(2, n, g(n), Regime.TwoConnected)

@_register(4)
def _four_connected(n):
    return SizeFormulaResult(4, n, h(n), Regime.FourConnected)

def size_formula(k: int, n: int) ->  SizeFormulaResult:
    """Evaluate ``f(k, n)`` together with the regime it comes from.

    :raises UnsupportedException: For k=3.
    :raises ValueError: For k < 1 or an order below the regime's minimum.
    """
    if k < 1:
        raise ValueError("k must be at least 1, got %d" % k)
    elif k == 3:
        raise UnsupportedException("f(3, n) is unsupported: the 3-connected case is settled by a companion result")
    elif k in _REGIMES:
        return _REGIMES[k](n)
    elif n < k + 1:
        raise ValueError("A %d-connected graph needs n >= %d, got n=%d" % (k, k+1, n))
    return SizeFormulaResult(k, n, degree_bound(k, n), Regime.Trivial)

def f(k: int, n: int) ->  int:
    """The minimum size of a k-connected locally nonforesty graph of order n."""
    return size_formula(k, n).value

def formula_table(k: int, start: int, stop: int) ->  List[SizeFormulaResult]:
    """``f(k, n)`` for ``start <= n <= stop``."""
    if start > stop:
        raise ValueError("Empty range %d:%d" % (start, stop))
    return [size_formula(k, n) for n in range(start, stop+1)]

def join_family_size(n: int) ->  int:
    """Size 5n/2 - 4 of K₂ ∨ ((n-2)/2)·K₂, the join case of the 2-connected lower bound."""
    if n < 4 or n % 2:
        raise ValueError("The join family needs an even order >= 4, got %d" % n)
    return 5*n//2 - 4

def conjecture1_bound(n: int) ->  Fraction:
    """The conjectured lower bound 7(n-1)/3 on the size of a 3-connected locally nonforesty graph."""
    if n < 1:
        raise ValueError("n must be at least 1, got %d" % n)
    return Fraction(7*(n-1), 3)

def conjecture1_margin(graph: Graph) ->  Fraction:
    """e(G) - 7(|G|-1)/3; negative when ``graph`` violates the bound."""
    return graph.size() - Fraction(7*(graph.order-1), 3)

def conjecture1_satisfied(graph: Graph) ->  bool:
    """Whether 3·e(G) >= 7·(|G|-1)."""
    return 3*graph.size() >= 7*(graph.order - 1)
