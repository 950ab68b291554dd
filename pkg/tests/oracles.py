"""Slow, obviously-correct reference computations used only by the tests.

Nothing here calls into the library's algorithms; inputs are plain
(n, edge list) pairs or Multigraph objects read through their fields.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def edges_of(g):
    return list(g.edges)


def components(n, edges):
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return len({find(v) for v in range(n)})


def rank(n, edges):
    return n - components(n, edges)


def whitney_terms(g):
    """{(x exponent, y exponent): count} of R(G; x, y) by direct subset sums."""
    out = {}
    E = edges_of(g)
    full = rank(g.n, E)
    for k in range(len(E) + 1):
        for X in combinations(range(len(E)), k):
            r = rank(g.n, [E[i] for i in X])
            key = (full - r, k - r)
            out[key] = out.get(key, 0) + 1
    return out


def proper_colourings(g, q):
    return sum(1 for col in product(range(q), repeat=g.n)
               if all(col[a] != col[b] for a, b in g.edges))


def all_proper_colourings(g, lam):
    return [col for col in product(range(1, lam + 1), repeat=g.n)
            if all(col[a] != col[b] for a, b in g.edges)]


def partial_is_proper(g, col):
    return all(not (col[a] and col[a] == col[b]) for a, b in g.edges)


def extendable(g, col, lam):
    return any(all(c == 0 or c == t for c, t in zip(col, total))
               for total in all_proper_colourings(g, lam))


def neighbours(g, v):
    out = set()
    for a, b in g.edges:
        if a == v:
            out.add(b)
        if b == v:
            out.add(a)
    return out


def forcing_moves(g, col, lam):
    moves = []
    for v in range(g.n):
        if col[v]:
            continue
        seen = {col[w] for w in neighbours(g, v) if col[w]}
        if len(seen) == lam - 1:
            (c,) = set(range(1, lam + 1)) - seen
            moves.append((v, c))
    return moves


def terminal_states(g, col, lam):
    """All end states of every maximal forcing sequence from ``col``."""
    ends, seen, stack = set(), set(), [tuple(col)]
    while stack:
        state = stack.pop()
        if state in seen:
            continue
        seen.add(state)
        moves = forcing_moves(g, state, lam)
        if not moves:
            ends.add(state)
        for v, c in moves:
            nxt = list(state)
            nxt[v] = c
            stack.append(tuple(nxt))
    return ends


def forces(g, col, lam):
    """Some forcing sequence ends in a total proper colouring."""
    return any(all(s) and partial_is_proper(g, s) for s in terminal_states(g, col, lam))


def prob_sum(g, lam, keep, C=(), U=()):
    """Sum over partial lam-assignments f with C <= dom f <= V - U and keep(f)
    of p^|dom f| (1 - lam p)^(n - |dom f|), as {power of p: coefficient} after expansion."""
    coeffs = {}
    for col in product(range(lam + 1), repeat=g.n):
        if any(not col[v] for v in C) or any(col[v] for v in U):
            continue
        if not keep(col):
            continue
        d = sum(1 for c in col if c)
        # expand p^d (1 - lam p)^(n-d) binomially
        for j in range(g.n - d + 1):
            c = _binom(g.n - d, j) * (-lam) ** j
            coeffs[d + j] = coeffs.get(d + j, 0) + c
    return {k: Fraction(v) for k, v in coeffs.items() if v}


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def poly_coeffs(poly, var="p"):
    """{exponent: coefficient} of a univariate MultiPoly."""
    out = {}
    for mono, c in poly.terms.items():
        d = dict(mono).get(var, 0)
        out[d] = c
    return out


def legal_position(g, col):
    for v in range(g.n):
        if not col[v]:
            continue
        # grow v's chromon and look for a liberty
        group, stack, free = {v}, [v], False
        while stack:
            u = stack.pop()
            for w in neighbours(g, u):
                if not col[w]:
                    free = True
                elif col[w] == col[v] and w not in group:
                    group.add(w)
                    stack.append(w)
        if not free:
            return False
    return True


def hom_cycle_brute(g, q):
    return sum(1 for h in product(range(q), repeat=g.n)
               if all((h[a] - h[b]) % q in (1, q - 1) for a, b in g.edges))


def chromon_brute(g, s):
    total = 0
    for col in product((0, 1), repeat=g.n):
        ok = True
        for v in range(g.n):
            group, stack = {v}, [v]
            while stack:
                u = stack.pop()
                for w in neighbours(g, u):
                    if col[w] == col[v] and w not in group:
                        group.add(w)
                        stack.append(w)
            if len(group) > s:
                ok = False
                break
        total += ok
    return total


def genus_brute(g):
    """Genus distribution by all linear orders of darts at each vertex.

    Every cyclic order arises from deg(v) linear orders, so counts are divided
    by the product of degrees at the end. Faces follow sigma(alpha(d)).
    """
    darts = []
    for a, b in g.edges:
        darts.append((a, b))
        darts.append((b, a))
    at = {v: [i for i, (a, _) in enumerate(darts) if a == v] for v in range(g.n)}
    counts = {}
    orders = [list(permutations(at[v])) for v in range(g.n)]
    for choice in product(*orders):
        sigma = {}
        for cyc in choice:
            for k, d in enumerate(cyc):
                sigma[d] = cyc[(k + 1) % len(cyc)]
        alpha = {i: i ^ 1 for i in range(len(darts))}
        seen, faces = set(), 0
        for d in range(len(darts)):
            if d in seen:
                continue
            faces += 1
            while d not in seen:
                seen.add(d)
                d = sigma[alpha[d]]
        if not darts:
            faces = 1
        genus = (2 - g.n + len(g.edges) - faces) // 2
        counts[genus] = counts.get(genus, 0) + 1
    div = 1
    for v in range(g.n):
        div *= max(len(at[v]), 1)
    return {k: v // div for k, v in sorted(counts.items())}
