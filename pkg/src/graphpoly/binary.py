"""Binary functions f: 2^E -> Q and the lambda-reduction family.

A binary function is stored as its table of values indexed by subset
bitmask (bit i set means element i is in the subset). Tables and
reductions are exact; the lambda-rank and lambda-Tutte-Whitney function
take logarithms and real powers, so they are evaluated in floating point.

The normaliser in the lambda-rank is ``(1 + lambda*)^|X|`` by default. With
that choice Q(empty) = 0 for every lambda, and at lambda = 0 and 1 the
lambda-rank of a graphic function is the dual rank and the rank of the
graph. ``normaliser="vertex"`` uses the constant exponent ``vertex_count``
instead; the deletion-contraction identity for R does not hold in that mode.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

from .graph import Multigraph
from .limits import LIMITS, SizeLimitError
from .poly import as_fraction


@dataclass(frozen=True)
class BinaryFunction:
    m: int
    values: tuple
    vertex_count: int = 0

    def __post_init__(self):
        vals = tuple(as_fraction(v) for v in self.values)
        if len(vals) != 1 << self.m:
            raise ValueError(f"table has {len(vals)} entries, expected 2^{self.m}")
        object.__setattr__(self, "values", vals)

    def __call__(self, X) -> Fraction:
        return self.values[_mask(X)]

    def to_json(self) -> dict:
        return {"m": self.m, "vertex_count": self.vertex_count,
                "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data) -> "BinaryFunction":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["m"], tuple(Fraction(v) for v in data["values"]),
                   data.get("vertex_count", 0))


def _mask(X) -> int:
    if isinstance(X, int):
        return X
    out = 0
    for i in X:
        out |= 1 << i
    return out


def graphic(g: Multigraph) -> BinaryFunction:
    """Indicator function of the cocircuit space (GF(2) row space of the incidence matrix)."""
    if g.m > LIMITS.subset_edges:
        raise SizeLimitError(f"binary function table over {g.m} edges is too large")
    rows = [0] * g.n
    for i, (a, b) in enumerate(g.edges):
        if a != b:  # a loop column is zero over GF(2)
            rows[a] |= 1 << i
            rows[b] |= 1 << i
    basis: list = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    span = {0}
    for b in basis:
        span |= {s ^ b for s in span}
    return BinaryFunction(g.m, tuple(int(X in span) for X in range(1 << g.m)), g.n)


def dual_lambda(lam) -> Fraction:
    """lambda* = (1 - lambda) / (1 + lambda)."""
    lam = as_fraction(lam)
    if lam == -1:
        raise ValueError("lambda = -1 has no dual")
    return (1 - lam) / (1 + lam)


def lambda_reduce(f: BinaryFunction, e: int, lam) -> BinaryFunction:
    """(f <lambda> e)(X) = (f(X) + lambda f(X+e)) / (f(empty) + lambda f({e}))."""
    lam = as_fraction(lam)
    if not 0 <= e < f.m:
        raise IndexError(f"element {e} not in ground set of size {f.m}")
    den = f.values[0] + lam * f.values[1 << e]
    if den == 0:
        raise ZeroDivisionError("λ-reduction undefined for this element")
    low = (1 << e) - 1
    out = []
    for X in range(1 << (f.m - 1)):
        Y = (X & low) | ((X >> e) << (e + 1))
        out.append((f.values[Y] + lam * f.values[Y | 1 << e]) / den)
    return BinaryFunction(f.m - 1, tuple(out), f.vertex_count)


def contract(f: BinaryFunction, e: int) -> BinaryFunction:
    return lambda_reduce(f, e, 0)


def delete(f: BinaryFunction, e: int) -> BinaryFunction:
    return lambda_reduce(f, e, 1)


def _log2(q: Fraction) -> float:
    if q <= 0:
        raise ValueError("Q undefined: nonpositive ratio inside the logarithm")
    return math.log2(q.numerator) - math.log2(q.denominator)


@lru_cache(maxsize=4096)
def q_table(f: BinaryFunction, lam, normaliser: str = "subset") -> tuple:
    """Q^(lambda) f (X) for every subset X, indexed by bitmask."""
    if normaliser not in ("subset", "vertex"):
        raise ValueError(f"unknown normaliser {normaliser!r}")
    lam = as_fraction(lam)
    lam_star = dual_lambda(lam)
    lam_pow = [lam ** k for k in range(f.m + 1)]
    star_pow = [lam_star ** k for k in range(f.m + 1)]
    support = [(W, v) for W, v in enumerate(f.values) if v]
    full = (1 << f.m) - 1
    top = sum((lam_pow[_popcount(W)] * v for W, v in support), Fraction(0))
    out = []
    for X in range(full + 1):
        bottom = sum((lam_pow[_popcount(W & (full ^ X))] * star_pow[_popcount(W & X)] * v
                      for W, v in support), Fraction(0))
        if top == 0 or bottom == 0:
            raise ValueError("Q undefined: zero sum inside the logarithm")
        power = _popcount(X) if normaliser == "subset" else f.vertex_count
        out.append(_log2((1 + lam_star) ** power * top / bottom))
    return tuple(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def q_rank(f: BinaryFunction, X, lam, normaliser: str = "subset") -> float:
    """lambda-rank Q^(lambda) f (X)."""
    return q_table(f, as_fraction(lam), normaliser)[_mask(X)]


def coloopiness(f: BinaryFunction, e: int, lam, normaliser: str = "subset") -> float:
    full = (1 << f.m) - 1
    return (q_rank(f, full, lam, normaliser)
            - q_rank(f, full ^ (1 << e), lam, normaliser))


def loopiness(f: BinaryFunction, e: int, lam, normaliser: str = "subset") -> float:
    return coloopiness(f, e, dual_lambda(lam), normaliser)


def lambda_tw(f: BinaryFunction, x: float, y: float, lam,
              normaliser: str = "subset") -> float:
    """R^(lambda)(f;x,y) = y^-Q(E) sum over X of (xy)^(Q(E)-Q(X)) y^|X|."""
    if x <= 0 or y <= 0:
        raise ValueError("lambda-Tutte-Whitney function needs x, y > 0")
    full = (1 << f.m) - 1
    q = q_table(f, as_fraction(lam), normaliser)
    qe = q[full]
    total = sum((x * y) ** (qe - q[X]) * y ** _popcount(X) for X in range(full + 1))
    return y ** (-qe) * total
