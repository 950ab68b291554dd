"""Legal Go positions on a graph.

A position is a partial assignment of lam colours (stones). A chromon is a
connected monochromatic group; it is free when one of its vertices has an
uncoloured neighbour (a liberty). A position is legal when every chromon is
free.

Legality does not care which colour is which, so positions are enumerated
once per colour pattern: a restricted-growth labelling in which colours
appear in order of first use. A pattern using j colours stands for
(lam)_j = lam (lam-1) ... (lam-j+1) positions.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product

from .graph import Multigraph, _DSU
from .limits import check_budget
from .poly import MultiPoly, falling_factorial, interpolate

P = MultiPoly.var("p")


def is_legal(g: Multigraph, f) -> bool:
    """Every chromon has a vertex with an uncoloured neighbour."""
    col = f.colours if hasattr(f, "colours") else tuple(f)
    dsu = _DSU(g.n)
    for a, b in g.edges:
        if col[a] and col[a] == col[b]:
            dsu.union(a, b)
    free = set()
    for a, b in g.edges:
        if col[a] and not col[b]:
            free.add(dsu.find(a))
        if col[b] and not col[a]:
            free.add(dsu.find(b))
    return all(dsu.find(v) in free for v in range(g.n) if col[v])


def _patterns(n: int):
    """Restricted-growth partial colourings: yield (colours, number of colours used)."""
    col = [0] * n

    def walk(i: int, used: int):
        if i == n:
            yield tuple(col), used
            return
        for c in range(used + 2):
            col[i] = c
            yield from walk(i + 1, max(used, c))
        col[i] = 0

    yield from walk(0, 0)


def _pattern_total(n: int) -> int:
    """Number of colour patterns on n vertices: the Bell number B(n + 1)."""
    row = [1]
    for _ in range(n + 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def legal_pattern_counts(g: Multigraph) -> Counter:
    """Counter mapping (colours used j, stones d) to the number of legal patterns."""
    check_budget(_pattern_total(g.n), f"{_pattern_total(g.n)} colour patterns")
    return _legal_pattern_counts(g)


@lru_cache(maxsize=256)
def _legal_pattern_counts(g: Multigraph) -> Counter:
    out: Counter = Counter()
    for col, used in _patterns(g.n):
        if is_legal(g, col):
            out[used, sum(1 for c in col if c)] += 1
    return out


def count_legal_positions(g: Multigraph, lam: int, method: str = "patterns") -> int:
    """Number of legal lam-positions; ``method="brute"`` visits all (lam+1)^n."""
    if method == "brute":
        check_budget((lam + 1) ** g.n, f"{lam + 1}^{g.n} positions")
        return sum(1 for col in product(range(lam + 1), repeat=g.n) if is_legal(g, col))
    if method != "patterns":
        raise ValueError(f"unknown method {method!r}")
    return sum(k * falling_factorial(lam, j) for (j, _), k in legal_pattern_counts(g).items())


def go_count_poly(g: Multigraph, var: str = "l") -> MultiPoly:
    """Go^#(G; lam) through its values at lam = 0..n, checked again at n + 1."""
    points = [(lam, count_legal_positions(g, lam)) for lam in range(g.n + 1)]
    poly = interpolate(points, var)
    check = g.n + 1
    if poly.evaluate({var: check}) != count_legal_positions(g, check):
        raise ArithmeticError("legal-position counts are not a polynomial of degree <= n")
    return poly


def go_prob_poly(g: Multigraph, lam: int) -> MultiPoly:
    """Pr(random partial lam-assignment is legal), each colour with probability p."""
    if lam < 1:
        raise ValueError("go_prob_poly needs lam >= 1")
    out = MultiPoly.const(0)
    for (j, d), k in legal_pattern_counts(g).items():
        ways = k * falling_factorial(lam, j)
        if ways:
            out = out + ways * P ** d * (1 - lam * P) ** (g.n - d)
    return MultiPoly(out.terms, ("p",))
