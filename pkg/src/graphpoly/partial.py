"""Partial colourings, forcing, and the PC / EC / FC polynomials.

Each vertex independently gets colour k with probability p (for each
k in 1..lam) and stays uncoloured with probability r = 1 - lam*p. The three
functions are the probabilities that the random partial assignment

* PC: is a proper partial colouring,
* EC: extends to a proper lam-colouring of the whole graph,
* FC: eventually forces a proper lam-colouring.

Assignments are tuples of length n with 0 meaning uncoloured. PC comes out
as a polynomial in ``p`` and ``l`` (standing for lam); EC and FC are only
polynomials in ``p`` once lam is fixed.

For a chromatically labelled graph G^(C,U) the assignment must colour every
vertex of C and leave every vertex of U uncoloured. The ``*_labelled``
functions return the joint probability of that event and the property by
default. With ``conditional=True`` they return the probability conditioned
on the labels instead, which divides out (lam*p)^|C| (1-lam*p)^|U|; the
vertex-splitting relation with weights lam*p and 1-lam*p holds for the
conditional form, while the joint form splits as a plain sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .graph import LabelledGraph, Multigraph, _DSU
from .limits import check_budget
from .poly import MultiPoly, falling_factorial
from .tutte import chromatic_poly

P = MultiPoly.var("p")
L = MultiPoly.var("l")


@dataclass(frozen=True)
class PartialAssignment:
    """Colours in 1..lam, 0 for uncoloured, one entry per vertex."""

    colours: tuple
    lam: int

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(self.colours))
        if self.lam < 0:
            raise ValueError("lam must be nonnegative")
        if any(not 0 <= c <= self.lam for c in self.colours):
            raise ValueError(f"colours must lie in 0..{self.lam}")

    @classmethod
    def from_dict(cls, n: int, colours: dict, lam: int) -> "PartialAssignment":
        out = [0] * n
        for v, c in colours.items():
            if c == 0:
                raise ValueError("colour 0 is reserved for 'uncoloured'")
            out[v] = c
        return cls(tuple(out), lam)

    @property
    def domain(self) -> frozenset:
        return frozenset(v for v, c in enumerate(self.colours) if c)

    def is_total(self) -> bool:
        return all(self.colours)

    def as_dict(self) -> dict:
        return {v: c for v, c in enumerate(self.colours) if c}


def _colours(f) -> tuple:
    return f.colours if isinstance(f, PartialAssignment) else tuple(f)


def is_proper(g: Multigraph, f) -> bool:
    """No edge joins two vertices of the same colour (loops at coloured vertices count)."""
    col = _colours(f)
    return not any(col[a] and col[a] == col[b] for a, b in g.edges)


def _forced_step(adj: list, col: list, lam: int):
    for v, c in enumerate(col):
        if c:
            continue
        seen = {col[w] for w in adj[v] if col[w]}
        if len(seen) == lam - 1:
            missing = next(k for k in range(1, lam + 1) if k not in seen)
            return v, missing
    return None


def forcing_closure(g: Multigraph, f: PartialAssignment) -> PartialAssignment:
    """Colour immediately forced vertices, lowest index first, until none is left.

    A vertex is immediately forced when its coloured neighbours show exactly
    lam - 1 distinct colours; it receives the one colour they miss.
    """
    adj = [sorted(s) for s in g.adjacency()]
    col = list(f.colours)
    while True:
        step = _forced_step(adj, col, f.lam)
        if step is None:
            return PartialAssignment(tuple(col), f.lam)
        v, c = step
        col[v] = c


def forces_colouring(g: Multigraph, f: PartialAssignment) -> bool:
    closed = forcing_closure(g, f)
    return closed.is_total() and is_proper(g, closed)


def is_extendable(g: Multigraph, f: PartialAssignment) -> bool:
    """Is there a proper lam-colouring of g agreeing with f on its domain?"""
    if not is_proper(g, f):
        return False
    adj = g.adjacency()
    if any(v in adj[v] for v in range(g.n)):
        return False
    col = list(f.colours)
    # most-constrained vertices first keeps the backtracking small
    todo = sorted((v for v in range(g.n) if not col[v]), key=lambda v: -len(adj[v]))

    def extend(i: int) -> bool:
        if i == len(todo):
            return True
        v = todo[i]
        used = {col[w] for w in adj[v]}
        for c in range(1, f.lam + 1):
            if c not in used:
                col[v] = c
                if extend(i + 1):
                    return True
        col[v] = 0
        return False

    return extend(0)


def is_colourable(g: Multigraph, lam: int) -> bool:
    return is_extendable(g, PartialAssignment((0,) * g.n, lam))


def _domain_counts(g: Multigraph, lam: int) -> dict:
    """For each domain bitmask D: [#proper, #extendable, #forcing] assignments with domain D."""
    # checked before the cache so a lowered limit still applies to seen graphs
    check_budget((lam + 1) ** g.n, f"{(lam + 1)}^{g.n} partial assignments")
    return _count_domains(g, lam)


@lru_cache(maxsize=256)
def _count_domains(g: Multigraph, lam: int) -> dict:
    counts: dict = {}
    for col in product(range(lam + 1), repeat=g.n):
        D = sum(1 << v for v, c in enumerate(col) if c)
        row = counts.setdefault(D, [0, 0, 0])
        f = PartialAssignment(col, lam)
        if not is_proper(g, f):
            continue
        row[0] += 1
        if is_extendable(g, f):
            row[1] += 1
        if forces_colouring(g, f):
            row[2] += 1
    return counts


def _weight(n: int, d: int, lam) -> MultiPoly:
    """p^d (1 - lam p)^(n - d); lam may be an int or the symbol l."""
    return P ** d * (1 - lam * P) ** (n - d)


def _masks(lg: LabelledGraph):
    must = sum(1 << v for v in lg.C)
    banned = sum(1 << v for v in lg.U)
    return must, banned


def _labelled_fixed(lg: LabelledGraph, lam: int, column: int, conditional: bool) -> MultiPoly:
    g = lg.graph
    must, banned = _masks(lg)
    out = MultiPoly.const(0)
    for D, row in _domain_counts(g, lam).items():
        if row[column] and D & must == must and not D & banned:
            d = bin(D).count("1")
            if conditional:
                term = P ** (d - len(lg.C)) * (1 - lam * P) ** (g.n - d - len(lg.U))
                term = term / lam ** len(lg.C)
            else:
                term = _weight(g.n, d, lam)
            out = out + term * row[column]
    return MultiPoly(out.terms, ("p",))


def pc_poly_fixed(g: Multigraph, lam: int) -> MultiPoly:
    return _labelled_fixed(LabelledGraph(g), lam, 0, False)


def ec_poly_fixed(g: Multigraph, lam: int) -> MultiPoly:
    return _labelled_fixed(LabelledGraph(g), lam, 1, False)


def fc_poly_fixed(g: Multigraph, lam: int) -> MultiPoly:
    return _labelled_fixed(LabelledGraph(g), lam, 2, False)


def ec_labelled(lg: LabelledGraph, lam: int, conditional: bool = False) -> MultiPoly:
    return _labelled_fixed(lg, lam, 1, conditional)


def fc_labelled(lg: LabelledGraph, lam: int, conditional: bool = False) -> MultiPoly:
    return _labelled_fixed(lg, lam, 2, conditional)


def pc_labelled(lg: LabelledGraph) -> MultiPoly:
    """Sum over domains C <= D <= V - U of P(G[D]; l) p^|D| (1 - l p)^(n - |D|)."""
    g = lg.graph
    free = [v for v in range(g.n) if v not in lg.C and v not in lg.U]
    check_budget(1 << len(free), f"2^{len(free)} vertex subsets")
    out = MultiPoly.const(0)
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            D = sorted(lg.C | set(extra))
            chrom = chromatic_poly(g.induced_subgraph(D), "l")
            out = out + chrom * _weight(g.n, len(D), L)
    return MultiPoly(out.terms, ("l", "p"))


def pc_poly(g: Multigraph) -> MultiPoly:
    return pc_labelled(LabelledGraph(g))


def pc_via_reduction(lg: LabelledGraph) -> MultiPoly:
    """Split each unlabelled vertex into its C and U versions, then use

    PC(G^(V-U, U)) = (1 - l p)^|U| p^(n-|U|) P(G - U; l)

    on the totally labelled graphs; P itself comes from deletion-contraction.
    """
    free = lg.unlabelled
    if free:
        v = free[0]
        return (pc_via_reduction(lg.with_labels(C=lg.C | {v}))
                + pc_via_reduction(lg.with_labels(U=lg.U | {v})))
    g = lg.graph
    chrom = chromatic_poly(g.delete_vertices(lg.U), "l")
    out = (1 - L * P) ** len(lg.U) * P ** (g.n - len(lg.U)) * chrom
    return MultiPoly(out.terms, ("l", "p"))


def _identify(lg: LabelledGraph, u: int, v: int) -> LabelledGraph:
    keep, gone = min(u, v), max(u, v)

    def relabel(w):
        if w == gone:
            w = keep
        return w - 1 if w > gone else w

    return LabelledGraph(lg.graph.identify_vertices(u, v),
                         frozenset(relabel(w) for w in lg.C),
                         frozenset(relabel(w) for w in lg.U))


def _clique_reduce(lg: LabelledGraph, lam: int, bracket) -> MultiPoly:
    free = lg.unlabelled
    if free:
        v = free[0]
        return (_clique_reduce(lg.with_labels(C=lg.C | {v}), lam, bracket)
                + _clique_reduce(lg.with_labels(U=lg.U | {v}), lam, bracket))
    g = lg.graph
    C = sorted(lg.C)
    for u, v in combinations(C, 2):
        if not g.has_edge(u, v):
            # u and v get different colours, or the same colour (one vertex fewer in C)
            added = LabelledGraph(g.add_edge(u, v), lg.C, lg.U)
            return (_clique_reduce(added, lam, bracket)
                    + P * _clique_reduce(_identify(lg, u, v), lam, bracket))
    if len(C) > lam or any(g.has_edge(v, v) for v in C) or not bracket(g, C, lam):
        return MultiPoly.const(0)
    return P ** len(C) * falling_factorial(lam, len(C)) * (1 - lam * P) ** len(lg.U)


def _colourable_bracket(g: Multigraph, clique: list, lam: int) -> bool:
    return is_colourable(g, lam)


def _forcing_bracket(g: Multigraph, clique: list, lam: int) -> bool:
    # every proper colouring of a clique is a colour permutation of this one
    col = [0] * g.n
    for i, v in enumerate(clique):
        col[v] = i + 1
    return forces_colouring(g, PartialAssignment(tuple(col), lam))


def ec_clique_reduce(lg: LabelledGraph, lam: int) -> MultiPoly:
    """EC (joint form) by splitting unlabelled vertices, then adding or
    identifying non-adjacent pairs of C until C is a clique. A clique base
    D contributes p^|D| (lam)_|D| (1-lam p)^|U| when H is lam-colourable.
    """
    return MultiPoly(_clique_reduce(lg, lam, _colourable_bracket).terms, ("p",))


def fc_clique_reduce(lg: LabelledGraph, lam: int) -> MultiPoly:
    """The same scheme for FC; the base asks whether the clique colouring forces."""
    return MultiPoly(_clique_reduce(lg, lam, _forcing_bracket).terms, ("p",))
