"""Seeded random graph streams.

All randomness goes through ``random.Random`` (Mersenne Twister MT19937),
whose output for a given integer seed is fixed across platforms and Python
versions. Edges are decided pair by pair in graph6 order, i.e. for
j = 1..n-1 and i = 0..j-1 the pair ij becomes an edge iff ``rng.random() < p``.
"""

from __future__ import annotations

import random
from collections.abc import Iterator

from .freeness import find_induced
from .graph import Graph, is_connected

MAX_SAMPLE_ORDER = 62
_MAX_TRIES = 10_000


def _check_range(order: int, p: float) -> None:
    if not 1 <= order <= MAX_SAMPLE_ORDER:
        raise ValueError(f"order must be in 1..{MAX_SAMPLE_ORDER}, got {order}")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {p}")


def gnp(order: int, p: float, rng: random.Random) -> Graph:
    """One G(n, p) draw from ``rng``."""
    edges = [(i, j) for j in range(1, order) for i in range(j) if rng.random() < p]
    return Graph(order, edges)


def sample_graphs(order: int, p: float, seed: int, count: int, connected_only: bool = False) -> Iterator[Graph]:
    """``count`` graphs from G(order, p); rejected draws still consume the stream."""
    _check_range(order, p)
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    rng = random.Random(seed)
    for _ in range(count):
        for _ in range(_MAX_TRIES):
            g = gnp(order, p, rng)
            if not connected_only or is_connected(g):
                break
        else:
            raise ValueError(f"no connected graph after {_MAX_TRIES} draws (order={order}, p={p})")
        yield g


def mixed_sample(seed: int, count: int, max_order: int, min_order: int = 1) -> Iterator[Graph]:
    """Graphs with order uniform in ``min_order..max_order`` and p uniform in [0, 1)."""
    if not 1 <= min_order <= max_order <= MAX_SAMPLE_ORDER:
        raise ValueError(f"bad order range {min_order}..{max_order}")
    rng = random.Random(seed)
    for _ in range(count):
        order = rng.randint(min_order, max_order)
        yield gnp(order, rng.random(), rng)


def spine_perturbation(rng: random.Random, max_order: int) -> Graph:
    """A path with a few extra vertices hung on short runs of consecutive path vertices.

    Such graphs are often claw-free with a nonempty attachment set, which
    plain G(n, p) rarely produces.
    """
    m = rng.randint(1, max_order)
    edges = [(i, i + 1) for i in range(m - 1)]
    order = m
    for _ in range(rng.randint(0, max_order - m)):
        start = rng.randrange(m)
        run = rng.randint(1, 3)
        hosts = list(range(start, min(start + run, m)))
        # Sometimes also join earlier extras, making small cliques.
        hosts += [w for w in range(m, order) if rng.random() < 0.5]
        edges += [(h, order) for h in hosts]
        order += 1
    return Graph(order, edges)


class IsoBuckets:
    """Deduplicate graphs up to isomorphism.

    Graphs are bucketed by (order, size, degree sequence); inside a bucket an
    induced embedding of one graph into another of the same order and size is
    an isomorphism.
    """

    def __init__(self):
        self._buckets: dict[tuple, list[Graph]] = {}

    def add(self, g: Graph) -> bool:
        key = (g.order, g.size(), tuple(sorted(g.degree(v) for v in range(g.order))))
        bucket = self._buckets.setdefault(key, [])
        if any(find_induced(h, g) is not None for h in bucket):
            return False
        bucket.append(g)
        return True

    def __len__(self) -> int:
        return sum(len(b) for b in self._buckets.values())
