"""Multigraphs with loops and parallel edges, and the operations on them.

Vertices are ``0..n-1``. An edge is identified by its position in
``edges``, since parallel edges cannot be told apart by their endpoints.
All operations return new graphs; vertex ids are renumbered contiguously
after a merge, the merged vertex keeping the smaller id.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


class EdgeKind(str, enum.Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    ORDINARY = "ordinary"


class EdgeSubsetStats(NamedTuple):
    size: int
    nu: int
    kappa: int
    kcount: int
    rank: int
    dualrank: int


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def _as_indices(X, m: int) -> list:
    if isinstance(X, int):
        return [i for i in range(m) if X >> i & 1]
    idx = sorted(set(X))
    if idx and (idx[0] < 0 or idx[-1] >= m):
        raise IndexError("edge index out of range")
    return idx


@dataclass(frozen=True, eq=False)
class Multigraph:
    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        norm = []
        for e in self.edges:
            u, v = e
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    # identity -------------------------------------------------------------

    def __eq__(self, other):
        """Labelled equality: same n and the same edge multiset."""
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.edges))))

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    # local structure ------------------------------------------------------

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list:
        deg = [0] * self.n
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def neighbours(self, v: int) -> set:
        """Distinct neighbours of ``v`` (``v`` itself if it has a loop)."""
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def adjacency(self) -> list:
        """``adj[v]`` is the set of distinct neighbours of ``v``."""
        adj = [set() for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def multiplicity(self, u: int, v: int) -> int:
        key = (u, v) if u <= v else (v, u)
        return sum(1 for e in self.edges if e == key)

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loops() and len(set(self.edges)) == self.m

    # minors ---------------------------------------------------------------

    def _check_edge(self, i: int) -> None:
        if not 0 <= i < self.m:
            raise IndexError(f"edge index {i} out of range for {self.m} edges")

    def delete_edge(self, i: int) -> "Multigraph":
        self._check_edge(i)
        return Multigraph(self.n, self.edges[:i] + self.edges[i + 1:])

    def _merge(self, u: int, v: int, edges: Sequence) -> "Multigraph":
        keep, gone = min(u, v), max(u, v)

        def relabel(w):
            if w == gone:
                w = keep
            return w - 1 if w > gone else w

        return Multigraph(self.n - 1, tuple((relabel(a), relabel(b)) for a, b in edges))

    def contract_edge(self, i: int) -> "Multigraph":
        """G/e: delete the edge, then identify its endpoints (loops: G - e)."""
        self._check_edge(i)
        u, v = self.edges[i]
        rest = self.edges[:i] + self.edges[i + 1:]
        if u == v:
            return Multigraph(self.n, rest)
        return self._merge(u, v, rest)

    def add_edge(self, u: int, v: int) -> "Multigraph":
        """G + uv for distinct, non-adjacent u and v."""
        if u == v:
            raise ValueError("add_edge needs two distinct vertices")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError("vertex out of range")
        if self.has_edge(u, v):
            raise ValueError(f"vertices {u} and {v} are already adjacent")
        return Multigraph(self.n, self.edges + ((u, v),))

    def add_parallel_edge(self, u: int, v: int) -> "Multigraph":
        """Add an edge uv with no adjacency restriction (loops allowed)."""
        return Multigraph(self.n, self.edges + ((u, v),))

    def identify_vertices(self, u: int, v: int) -> "Multigraph":
        """G/uv: merge u and v, keeping every edge."""
        if u == v:
            raise ValueError("identify_vertices needs two distinct vertices")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise IndexError("vertex out of range")
        return self._merge(u, v, self.edges)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Multigraph":
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        return Multigraph(len(keep), tuple(
            (pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos))

    def delete_vertices(self, vertices: Iterable[int]) -> "Multigraph":
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def edge_subgraph(self, X) -> "Multigraph":
        """Spanning subgraph (V, X)."""
        return Multigraph(self.n, tuple(self.edges[i] for i in _as_indices(X, self.m)))

    def without_isolated(self) -> "Multigraph":
        used = {w for e in self.edges for w in e}
        return self.induced_subgraph(used)

    # connectivity ---------------------------------------------------------

    def components(self) -> list:
        dsu = _DSU(self.n)
        for a, b in self.edges:
            dsu.union(a, b)
        groups: dict = {}
        for v in range(self.n):
            groups.setdefault(dsu.find(v), []).append(v)
        return list(groups.values())

    def num_components(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.n <= 1 or self.num_components() == 1

    def is_bipartite(self) -> bool:
        side = [-1] * self.n
        adj = self.adjacency()
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if side[w] < 0:
                        side[w] = 1 - side[v]
                        stack.append(w)
                    elif side[w] == side[v]:
                        return False
        return True

    def rank(self, X=None) -> int:
        """rho(X) = n - k(X); rho(G) when X is omitted."""
        idx = range(self.m) if X is None else _as_indices(X, self.m)
        dsu = _DSU(self.n)
        return sum(dsu.union(*self.edges[i]) for i in idx)

    def subset_stats(self, X) -> EdgeSubsetStats:
        idx = _as_indices(X, self.m)
        touched = {w for i in idx for w in self.edges[i]}
        dsu = _DSU(self.n)
        merges = sum(dsu.union(*self.edges[i]) for i in idx)
        nu = len(touched)
        kappa = len({dsu.find(w) for w in touched})
        kcount = kappa + self.n - nu
        rank = nu - kappa
        assert rank == merges == self.n - kcount
        rest = [i for i in range(self.m) if i not in set(idx)]
        dual = len(idx) + self.rank(rest) - self.rank()
        return EdgeSubsetStats(len(idx), nu, kappa, kcount, rank, dual)

    def bridges(self) -> set:
        """Indices of coloops (edges whose deletion adds a component)."""
        inc = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            if a != b:
                inc[a].append((b, i))
                inc[b].append((a, i))
        disc = [-1] * self.n
        low = [0] * self.n
        out = set()
        clock = 0
        for root in range(self.n):
            if disc[root] >= 0:
                continue
            disc[root] = low[root] = clock
            clock += 1
            stack = [(root, -1, iter(inc[root]))]
            while stack:
                v, via, it = stack[-1]
                for w, i in it:
                    if i == via:
                        continue
                    if disc[w] < 0:
                        disc[w] = low[w] = clock
                        clock += 1
                        stack.append((w, i, iter(inc[w])))
                        break
                    low[v] = min(low[v], disc[w])
                else:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        low[parent] = min(low[parent], low[v])
                        if low[v] > disc[parent]:
                            out.add(via)
        return out

    def classify_edge(self, i: int) -> EdgeKind:
        self._check_edge(i)
        a, b = self.edges[i]
        if a == b:
            return EdgeKind.LOOP
        if self.delete_edge(i).num_components() > self.num_components():
            return EdgeKind.COLOOP
        return EdgeKind.ORDINARY

    def block_edge_sets(self) -> list:
        """Edge-index sets of the blocks: 2-connected pieces, bridges, loops."""
        inc = [[] for _ in range(self.n)]
        blocks = []
        for i, (a, b) in enumerate(self.edges):
            if a == b:
                blocks.append([i])
            else:
                inc[a].append((b, i))
                inc[b].append((a, i))
        disc = [-1] * self.n
        low = [0] * self.n
        clock = 0
        edge_stack: list = []
        for root in range(self.n):
            if disc[root] >= 0:
                continue
            disc[root] = low[root] = clock
            clock += 1
            stack = [(root, -1, iter(inc[root]))]
            while stack:
                v, via, it = stack[-1]
                advanced = False
                for w, i in it:
                    if i == via:
                        continue
                    if disc[w] < 0:
                        edge_stack.append(i)
                        disc[w] = low[w] = clock
                        clock += 1
                        stack.append((w, i, iter(inc[w])))
                        advanced = True
                        break
                    if disc[w] < disc[v]:
                        edge_stack.append(i)
                    low[v] = min(low[v], disc[w])
                if advanced:
                    continue
                stack.pop()
                if not stack:
                    continue
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[v])
                if low[v] >= disc[parent]:
                    block = []
                    while True:
                        j = edge_stack.pop()
                        block.append(j)
                        if j == via:
                            break
                    blocks.append(sorted(block))
        return blocks

    def blocks(self) -> list:
        """The blocks as graphs on their own (renumbered) vertex sets."""
        out = []
        for idx in self.block_edge_sets():
            out.append(self.edge_subgraph(idx).without_isolated())
        return out

    def line_graph(self) -> "Multigraph":
        if not self.is_simple():
            raise ValueError("line graph restricted to simple graphs")
        out = []
        for i in range(self.m):
            for j in range(i + 1, self.m):
                if set(self.edges[i]) & set(self.edges[j]):
                    out.append((i, j))
        return Multigraph(self.m, tuple(out))

    # isomorphism ------------------------------------------------------

    def canonical_form(self) -> bytes:
        from .canon import canonical_form
        return canonical_form(self)

    def is_isomorphic(self, other: "Multigraph") -> bool:
        from .canon import is_isomorphic
        return is_isomorphic(self, other)


@dataclass(frozen=True)
class LabelledGraph:
    """A graph with vertices labelled must-colour (C) or must-not-colour (U)."""

    graph: Multigraph
    C: frozenset = frozenset()
    U: frozenset = frozenset()

    def __post_init__(self):
        C, U = frozenset(self.C), frozenset(self.U)
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "U", U)
        if C & U:
            raise ValueError(f"labels overlap on {sorted(C & U)}")
        if any(not 0 <= v < self.graph.n for v in C | U):
            raise ValueError("label on a vertex outside the graph")

    @property
    def unlabelled(self) -> list:
        return [v for v in range(self.graph.n) if v not in self.C and v not in self.U]

    def is_total(self) -> bool:
        return len(self.C) + len(self.U) == self.graph.n

    def with_labels(self, C=None, U=None) -> "LabelledGraph":
        return LabelledGraph(self.graph, self.C if C is None else C,
                             self.U if U is None else U)


def disjoint_union(*graphs: Multigraph) -> Multigraph:
    n = 0
    edges = []
    for g in graphs:
        edges.extend((a + n, b + n) for a, b in g.edges)
        n += g.n
    return Multigraph(n, tuple(edges))


# named constructors -------------------------------------------------------

def null(n: int) -> Multigraph:
    return Multigraph(n)


def complete(n: int) -> Multigraph:
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def cycle(n: int) -> Multigraph:
    """C_n; C_1 is a loop and C_2 a double edge."""
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Multigraph:
    """P_n on n vertices."""
    return Multigraph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def star(k: int) -> Multigraph:
    return complete_bipartite(1, k)


def _letters(n: int, pairs: str) -> Multigraph:
    return Multigraph(n, tuple((ord(p[0]) - 97, ord(p[1]) - 97) for p in pairs.split()))


def gray1() -> Multigraph:
    """First Gray graph: vertices a..f, double edge ab."""
    return _letters(6, "ab ab ac bc bd cd be de cf ef")


def gray2() -> Multigraph:
    """Second Gray graph: vertices a..f, double edge cd."""
    return _letters(6, "ab ac bc cd cd df be de cf ef")


_FAMILIES = {
    "K": complete, "complete": complete,
    "C": cycle, "cycle": cycle,
    "P": path, "path": path,
    "null": null, "N": null,
    "Kab": complete_bipartite, "bipartite": complete_bipartite,
    "star": star,
    "gray1": gray1, "gray2": gray2,
}


def construct(name: str, *params: int) -> Multigraph:
    """Build a named graph, e.g. ``construct("K", 4)`` or ``construct("gray1")``."""
    try:
        family = _FAMILIES[name]
    except KeyError:
        raise ValueError(f"unknown graph family {name!r}") from None
    return family(*params)
