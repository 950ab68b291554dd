"""Canonical forms of small multigraphs.

Exhaustive search over vertex orderings, cut down in three ways: vertices
start in cells keyed by (loops, degree), cells are refined until every vertex
in a cell sees the same number of edges into every other cell, and branches
that an already-discovered automorphism maps onto an explored branch are
skipped. The certificate of an ordering is its sorted relabelled edge list;
the canonical form is the smallest certificate over all orderings.
"""

from __future__ import annotations

from .graph import Multigraph
from .limits import LIMITS, SizeLimitError


def _refine(cells: list, mult: list) -> list:
    n_changed = True
    while n_changed:
        n_changed = False
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w, k in mult[v].items():
                    if w != v:
                        counts[where[w]] += k
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) > 1:
                n_changed = True
                for key in sorted(sig):
                    out.append(sig[key])
            else:
                out.append(cell)
        cells = out
    return cells


class _Search:
    def __init__(self, g: Multigraph):
        self.g = g
        self.mult = [dict() for _ in range(g.n)]
        for a, b in g.edges:
            self.mult[a][b] = self.mult[a].get(b, 0) + 1
            if a != b:
                self.mult[b][a] = self.mult[b].get(a, 0) + 1
        self.best = None
        self.best_order = None
        self.autos: list = []

    def certificate(self, order: list) -> tuple:
        pos = {v: i for i, v in enumerate(order)}
        return tuple(sorted(
            (min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in self.g.edges))

    def leaf(self, order: list) -> None:
        cert = self.certificate(order)
        if self.best is None or cert < self.best:
            self.best, self.best_order = cert, order
        elif cert == self.best:
            gamma = [0] * self.g.n
            for a, b in zip(self.best_order, order):
                gamma[a] = b
            self.autos.append(gamma)

    def orbit_rep(self, prefix: list):
        parent = list(range(self.g.n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for gamma in self.autos:
            if all(gamma[p] == p for p in prefix):
                for v, w in enumerate(gamma):
                    ra, rb = find(v), find(w)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
        return find

    def run(self, cells: list, prefix: list) -> None:
        cells = _refine(cells, self.mult)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self.leaf([c[0] for c in cells])
            return
        cell = cells[target]
        tried: list = []
        for v in sorted(cell):
            if tried:
                find = self.orbit_rep(prefix)
                if find(v) in {find(t) for t in tried}:
                    continue
            rest = [w for w in cell if w != v]
            self.run(cells[:target] + [[v], rest] + cells[target + 1:], prefix + [v])
            tried.append(v)


def canonical_labelling(g: Multigraph) -> tuple:
    """Return ``(order, certificate)``; vertex ``order[i]`` gets label ``i``."""
    if g.n > LIMITS.canon_n:
        raise SizeLimitError(
            f"canonicalisation limit exceeded ({g.n} > {LIMITS.canon_n} vertices)")
    if g.n == 0:
        return [], ()
    s = _Search(g)
    loops = [0] * g.n
    for a, b in g.edges:
        if a == b:
            loops[a] += 1
    deg = g.degrees()
    start = {}
    for v in range(g.n):
        start.setdefault((loops[v], deg[v]), []).append(v)
    s.run([start[k] for k in sorted(start)], [])
    return s.best_order, s.best


def canonical_form(g: Multigraph) -> bytes:
    _, cert = canonical_labelling(g)
    return (f"{g.n}:" + ",".join(f"{a}-{b}" for a, b in cert)).encode()


def canonical_graph(g: Multigraph) -> Multigraph:
    _, cert = canonical_labelling(g)
    return Multigraph(g.n, cert)


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
