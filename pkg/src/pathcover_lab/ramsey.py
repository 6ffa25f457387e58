"""Ramsey upper bounds and the brute-force R(3,3) check."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .graph import Graph, all_labelled_graphs
from .families import C, generate


@dataclass(frozen=True)
class RamseyBound:
    n1: int
    n2: int
    value: int
    exact: bool


@lru_cache(maxsize=None)
def _pascal(m: int, n: int) -> int:
    # Iterative table fill; recursion depth would blow up for large arguments.
    if m == 1 or n == 1:
        return 1
    if m > n:
        m, n = n, m
    row = [1] * n  # row[j] = R_ub(1, j+1)
    for _ in range(2, m + 1):
        for j in range(1, n):
            row[j] += row[j - 1]
    return row[n - 1]


def ramsey_upper(n1: int, n2: int) -> RamseyBound:
    """Erdos-Szekeres bound R(n1, n2) <= C(n1+n2-2, n1-1).

    Built from R_ub(m, n) = R_ub(m-1, n) + R_ub(m, n-1) with R_ub(1, k) = 1.
    ``exact`` is set only on the R(1, k), R(2, k) lines and at (3, 3), where
    the bound is the true Ramsey number.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError(f"Ramsey arguments must be positive, got ({n1}, {n2})")
    if max(n1, n2) <= 256:
        value = _pascal(n1, n2)
    else:
        # Same number, closed form; the table is too wide here.
        value = comb(n1 + n2 - 2, n1 - 1)
    exact = n1 <= 2 or n2 <= 2 or (n1, n2) == (3, 3)
    return RamseyBound(n1, n2, value, exact)


def has_clique(g: Graph, k: int) -> bool:
    return any(all(g.has_edge(u, v) for u, v in combinations(c, 2)) for c in combinations(g.vertices(), k))


def has_independent_set(g: Graph, k: int) -> bool:
    return any(not any(g.has_edge(u, v) for u, v in combinations(c, 2)) for c in combinations(g.vertices(), k))


def verify_ramsey_33() -> bool:
    """Brute-force R(3,3) = 6: all 2^15 labelled 6-vertex graphs, plus the C5 witness."""
    c5 = generate(C(5))
    if has_clique(c5, 3) or has_independent_set(c5, 3):
        return False
    triples = list(combinations(range(6), 3))
    for g in all_labelled_graphs(6):
        adj = g.adj
        ok = False
        for a, b, c in triples:
            ab, ac, bc = adj[a] >> b & 1, adj[a] >> c & 1, adj[b] >> c & 1
            if ab == ac == bc:
                ok = True
                break
        if not ok:
            return False
    return True
