"""Graph invariants that are not polynomials in their parameter.

* homomorphisms into the cycle C_q,
* 2-assignments whose monochromatic components have bounded size,
* the genus distribution over rotation systems.
"""

from __future__ import annotations

import math
from collections import Counter
from itertools import permutations, product

from .graph import Multigraph, _DSU
from .limits import check_budget


def hom_cycle_count(g: Multigraph, q: int, surjective: bool = False) -> int:
    """Maps V -> Z_q sending every edge to a pair of cyclically adjacent vertices.

    With ``surjective`` only maps hitting every vertex of C_q are counted.
    """
    if q < 3:
        raise ValueError("hom_cycle_count needs q >= 3")
    if g.has_loops():
        return 0
    adj = g.adjacency()
    order = _bfs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    earlier = [[w for w in adj[v] if pos[w] < pos[v]] for v in order]
    image = [0] * g.n
    hits = [0] * q

    def walk(i: int) -> int:
        if i == len(order):
            return int(not surjective or all(hits))
        v = order[i]
        if earlier[i]:
            w = earlier[i][0]
            options = {(image[w] + 1) % q, (image[w] - 1) % q}
        else:
            options = range(q)
        total = 0
        for c in options:
            if all((image[w] - c) % q in (1, q - 1) for w in earlier[i]):
                image[v] = c
                hits[c] += 1
                total += walk(i + 1)
                hits[c] -= 1
        return total

    return walk(0)


def _bfs_order(g: Multigraph) -> list:
    adj = g.adjacency()
    seen, order = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        queue = [s]
        for v in queue:
            order.append(v)
            for w in sorted(adj[v]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def bounded_chromon_count(g: Multigraph, s: int) -> int:
    """Number of 2-assignments V -> {1, 2} whose chromons all have at most s vertices."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    check_budget(1 << g.n, f"2^{g.n} two-colour assignments")
    total = 0
    for bits in range(1 << g.n):
        dsu = _DSU(g.n)
        for a, b in g.edges:
            if (bits >> a & 1) == (bits >> b & 1):
                dsu.union(a, b)
        sizes = Counter(dsu.find(v) for v in range(g.n))
        if all(k <= s for k in sizes.values()):
            total += 1
    return total


def rotation_system_count(g: Multigraph) -> int:
    return math.prod(math.factorial(max(d - 1, 0)) for d in g.degrees())


def genus_distribution(g: Multigraph) -> dict:
    """Map genus -> number of rotation systems of g embedding with that genus."""
    if g.has_loops():
        raise ValueError("genus distribution is defined here for loopless graphs")
    if not g.is_connected():
        raise ValueError("genus distribution needs a connected graph")
    check_budget(rotation_system_count(g), "rotation systems")
    # dart 2i runs a -> b along edge i = (a, b), dart 2i + 1 runs b -> a
    out_darts = [[] for _ in range(g.n)]
    for i, (a, b) in enumerate(g.edges):
        out_darts[a].append(2 * i)
        out_darts[b].append(2 * i + 1)
    # fixing the first dart at each vertex picks one representative per cyclic order
    choices = [[(ds[0],) + rest for rest in permutations(ds[1:])] if ds else [()]
               for ds in out_darts]
    dist: Counter = Counter()
    for rotation in product(*choices):
        succ = {}
        for cyc in rotation:
            for k, d in enumerate(cyc):
                succ[d] = cyc[(k + 1) % len(cyc)]
        faces = _count_faces(succ, 2 * g.m)
        faces = faces if g.m else 1
        dist[(2 - g.n + g.m - faces) // 2] += 1
    return dict(sorted(dist.items()))


def _count_faces(succ: dict, darts: int) -> int:
    # a face walks d = (u -> v), then leaves v along the rotation successor of (v -> u)
    seen = [False] * darts
    faces = 0
    for start in range(darts):
        if seen[start]:
            continue
        faces += 1
        d = start
        while not seen[d]:
            seen[d] = True
            d = succ[d ^ 1]
    return faces
