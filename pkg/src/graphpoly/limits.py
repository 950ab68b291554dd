"""Size limits shared by the exponential-time routines.

The defaults keep every computation at desk scale. They are plain attributes
so callers (and the CLI flags) can raise or lower them::

    from graphpoly.limits import LIMITS
    LIMITS.subset_edges = 24
"""

from __future__ import annotations

from dataclasses import dataclass


class SizeLimitError(ValueError):
    """Raised when an input exceeds a configured enumeration budget."""


@dataclass
class Limits:
    canon_n: int = 10            # vertices, brute-force canonical labelling
    subset_edges: int = 20       # edges, 2^m subset expansions
    enumeration: int = 10**7     # assignments / positions / rotation systems
    cache_size: int = 200_000    # entries in the Tutte memo cache
    search_nodes: int = 50_000   # expressions explored by certificate search
    search_depth: int = 6        # maximum certificate length for search


LIMITS = Limits()


def check_budget(count: int, what: str) -> None:
    if count > LIMITS.enumeration:
        raise SizeLimitError(
            f"{what}: {count} cases exceeds enumeration limit {LIMITS.enumeration}"
        )
