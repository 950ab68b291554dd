"""Potts, Ising and symmetric Ashkin-Teller partition functions.

All three are computed by summing over spin assignments and are returned in
reduced Boltzmann variables, so that they are exact polynomials:

* Potts:  sum over f: V -> [q] of w^|E^-(f)|,          w = e^{-K}
* Ising:  sum over sigma of s^|E^-(sigma)|,           s = e^{-2K}
* SymAT:  sum over (sigma, tau) of a^(|E^-(sigma)|+|E^-(tau)|) b^|E^-(sigma tau)|,
  with a = e^{-2K}, b = e^{-2K'}

E^-(f) is the set of edges whose ends get different spins ("good" edges);
a loop is never good. The exponential prefactors that turn a reduced sum
into the physical partition function are returned separately by the
``*_prefactor`` functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .graph import Multigraph
from .limits import check_budget
from .poly import MultiPoly, as_fraction
from .tutte import whitney_rank_poly


class Prefactor(NamedTuple):
    """The factor exp(coupling * edges) omitted from a reduced sum."""

    coupling: str
    edges: int

    def __str__(self):
        if self.edges == 0 or not self.coupling:
            return "1"
        return f"exp(({self.coupling})*{self.edges})"


def _assignments(n: int, q: int) -> np.ndarray:
    check_budget(q ** n, f"{q}^{n} spin assignments")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int8)
    grid = np.indices((q,) * n, dtype=np.int8)
    return grid.reshape(n, -1).T


def _good_counts(g: Multigraph, spins: np.ndarray) -> np.ndarray:
    good = np.zeros(spins.shape[0], dtype=np.int64)
    for a, b in g.edges:
        good += spins[:, a] != spins[:, b]
    return good


def _univariate(counts: np.ndarray, var: str) -> MultiPoly:
    return MultiPoly({((var, k),): int(c) for k, c in enumerate(counts) if c}, (var,))


def potts_reduced(g: Multigraph, q: int, var: str = "w") -> MultiPoly:
    if q < 1:
        raise ValueError("Potts model needs q >= 1")
    good = _good_counts(g, _assignments(g.n, q))
    return _univariate(np.bincount(good, minlength=g.m + 1), var)


def ising_reduced(g: Multigraph, var: str = "s") -> MultiPoly:
    return potts_reduced(g, 2, var)


def symat_reduced(g: Multigraph) -> MultiPoly:
    # spin pair (sigma, tau) packed as the two low bits of a 4-state colour
    states = _assignments(g.n, 4)
    sigma, tau = states & 1, states >> 1
    d_sigma = _good_counts(g, sigma)
    d_tau = _good_counts(g, tau)
    d_prod = _good_counts(g, sigma ^ tau)
    a_exp = d_sigma + d_tau
    keys, counts = np.unique(a_exp * (g.m + 1) + d_prod, return_counts=True)
    terms = {}
    for key, c in zip(keys.tolist(), counts.tolist()):
        ea, eb = divmod(key, g.m + 1)
        terms[(("a", ea), ("b", eb))] = c
    return MultiPoly(terms, ("a", "b"))


def ising_prefactor(g: Multigraph) -> Prefactor:
    return Prefactor("K", g.m)


def symat_prefactor(g: Multigraph) -> Prefactor:
    return Prefactor("2K+K'", g.m)


def potts_at(g: Multigraph, q: int, t) -> Fraction:
    """sum over f of t^(-|E^-(f)|), i.e. the Potts sum at e^K = t."""
    return potts_reduced(g, q).evaluate({"w": 1 / as_fraction(t)})


def potts_from_whitney(g: Multigraph, q: int, t) -> Fraction:
    """The same sum via q^k(G) (t-1)^rho(G) t^-|E| R(G; q/(t-1), t-1)."""
    t = as_fraction(t)
    if t == 1:
        raise ValueError("t = e^K must differ from 1")
    r = whitney_rank_poly(g).evaluate({"x": Fraction(q) / (t - 1), "y": t - 1})
    return Fraction(q) ** g.num_components() * (t - 1) ** g.rank() * t ** -g.m * r
