"""Tutte-Whitney polynomials and their relatives.

``whitney_rank_poly`` expands over all edge subsets; ``tutte_poly`` runs
deletion-contraction with a memo keyed on canonical forms. The two are
independent routes to the same invariant, related by ``T(x, y) = R(x-1, y-1)``.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from typing import Callable, Optional

from .graph import Multigraph, _DSU
from .limits import LIMITS, SizeLimitError
from .poly import MultiPoly

X = MultiPoly.var("x")
Y = MultiPoly.var("y")
ONE = MultiPoly.const(1)


class _Memo:
    """Bounded LRU map guarded by a lock; shared across threads."""

    def __init__(self):
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key):
        with self._lock:
            value = self._data.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
                self._data.move_to_end(key)
            return value

    def put(self, key, value) -> None:
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > LIMITS.cache_size:
                self._data.popitem(last=False)

    def clear(self) -> None:
        with self._lock:
            self._data.clear()
            self.hits = self.misses = 0

    def __len__(self):
        return len(self._data)


TUTTE_CACHE = _Memo()


def _subset_ranks(g: Multigraph):
    """Yield ``(|X|, rank(X))`` for every edge subset X."""
    if g.m > LIMITS.subset_edges:
        raise SizeLimitError(
            f"subset expansion over {g.m} edges exceeds limit {LIMITS.subset_edges}")
    for mask in range(1 << g.m):
        dsu = _DSU(g.n)
        size = rank = 0
        for i, (a, b) in enumerate(g.edges):
            if mask >> i & 1:
                size += 1
                rank += dsu.union(a, b)
        yield mask, size, rank


def whitney_rank_poly(g: Multigraph) -> MultiPoly:
    """R(G;x,y) = sum over X of x^(rho(E)-rho(X)) y^(|X|-rho(X))."""
    full = g.rank()
    counts: dict = {}
    for _, size, rank in _subset_ranks(g):
        key = ((("x", full - rank), ("y", size - rank)))
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(counts, ("x", "y"))


def first_ordinary(g: Multigraph, ordinary: list) -> int:
    return ordinary[0]


def tutte_poly(g: Multigraph, *, pivot: Optional[Callable] = None,
               memo: bool = True) -> MultiPoly:
    """Tutte polynomial by deletion-contraction.

    Loops and coloops are peeled off first; otherwise ``pivot(g, ordinary)``
    picks the edge to branch on (default: the first ordinary edge). With
    ``memo`` the results are cached by canonical form; graphs beyond the
    canonicalisation limit fall back to plain recursion.
    """
    pick = pivot or first_ordinary
    result = _tutte(g, pick, memo)
    return MultiPoly(result.terms, ("x", "y"))


def _tutte(g: Multigraph, pick, memo: bool) -> MultiPoly:
    factor = ONE
    while True:
        if g.m == 0:
            return factor
        loops = [i for i, (a, b) in enumerate(g.edges) if a == b]
        if loops:
            factor = factor * Y ** len(loops)
            g = Multigraph(g.n, tuple(e for e in g.edges if e[0] != e[1]))
            continue
        bridges = g.bridges()
        if bridges:
            factor = factor * X ** len(bridges)
            g = Multigraph(g.n, tuple(e for i, e in enumerate(g.edges) if i not in bridges))
            continue
        break

    g = g.without_isolated()
    key = None
    if memo and g.n <= LIMITS.canon_n:
        key = g.canonical_form()
        hit = TUTTE_CACHE.get(key)
        if hit is not None:
            return factor * hit

    ordinary = list(range(g.m))
    e = pick(g, ordinary)
    value = _tutte(g.delete_edge(e), pick, memo) + _tutte(g.contract_edge(e), pick, memo)
    if key is not None:
        TUTTE_CACHE.put(key, value)
    return factor * value


def tutte_from_whitney(g: Multigraph) -> MultiPoly:
    r = whitney_rank_poly(g)
    return r.subs(x=X - 1, y=Y - 1)


def chromatic_poly(g: Multigraph, var: str = "q") -> MultiPoly:
    """P(G;q) = (-1)^rho(G) q^k(G) T(G; 1-q, 0)."""
    q = MultiPoly.var(var)
    t = tutte_poly(g).subs(x=1 - q, y=0)
    sign = -1 if g.rank() % 2 else 1
    out = t * (q ** g.num_components()) * sign
    return MultiPoly(out.terms, (var,))


def edge_chromatic_count_poly(g: Multigraph, var: str = "q") -> MultiPoly:
    """Number of proper q-edge-colourings, as P(L(G); q)."""
    return chromatic_poly(g.line_graph(), var)


def bp_poly(g: Multigraph) -> MultiPoly:
    """Borzacchini-Pulito polynomial: sum over X of x^|X| y^k(X) z^nu(X)."""
    if g.m > LIMITS.subset_edges:
        raise SizeLimitError(
            f"subset expansion over {g.m} edges exceeds limit {LIMITS.subset_edges}")
    counts: dict = {}
    for mask in range(1 << g.m):
        st = g.subset_stats(mask)
        key = (("x", st.size), ("y", st.kcount), ("z", st.nu))
        counts[key] = counts.get(key, 0) + 1
    return MultiPoly(counts, ("x", "y", "z"))
