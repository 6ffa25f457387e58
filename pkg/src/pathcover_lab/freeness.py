"""Induced-subgraph search, H-freeness and the family order relation."""

from __future__ import annotations

from collections.abc import Sequence

from .families import SpecError, target_family
from .graph import Graph, bits


def find_induced(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Return an induced embedding of ``h`` into ``g`` or ``None``.

    The embedding is a tuple whose entry ``i`` is the image of vertex ``i`` of
    ``h``. Vertices of ``h`` are placed in label order and candidates in ``g``
    are tried in ascending order, so the witness is the lexicographically
    least one.
    """
    k, n = h.order, g.order
    if k > n:
        return None
    if k == 0:
        return ()
    gadj, hadj = g.adj, h.adj
    gfull = g.full_mask
    hdeg = [h.degree(u) for u in range(k)]
    gdeg = [g.degree(v) for v in range(n)]
    # Vertices of g whose degree is too small for u can never host it.
    by_degree = [sum(1 << v for v in range(n) if gdeg[v] >= hdeg[u]) for u in range(k)]
    image = [0] * k

    def extend(u: int, used: int) -> bool:
        cand = by_degree[u] & ~used
        for w in range(u):
            if hadj[u] >> w & 1:
                cand &= gadj[image[w]]
            else:
                cand &= gfull & ~gadj[image[w]]
            if not cand:
                return False
        for v in bits(cand):
            image[u] = v
            if u + 1 == k or extend(u + 1, used | 1 << v):
                return True
        return False

    return tuple(image) if extend(0, 0) else None


def is_free(g: Graph, h: Graph) -> bool:
    return find_induced(g, h) is None


def is_family_free(g: Graph, hs: Sequence[Graph]) -> bool:
    return all(find_induced(g, h) is None for h in hs)


def first_contained(g: Graph, hs: Sequence[Graph]) -> tuple[int, tuple[int, ...]] | None:
    """Index and witness of the first member of ``hs`` found induced in ``g``."""
    for i, h in enumerate(hs):
        emb = find_induced(g, h)
        if emb is not None:
            return i, emb
    return None


def family_leq(h1s: Sequence[Graph], h2s: Sequence[Graph]) -> bool:
    """True iff every member of ``h2s`` contains some member of ``h1s`` as an induced subgraph."""
    if not h1s or not h2s:
        raise ValueError("family_leq needs two nonempty families")
    return all(any(find_induced(h2, h1) is not None for h1 in h1s) for h2 in h2s)


def matches_characterization(hs: Sequence[Graph], mode: str, n_max: int) -> int | None:
    """Least n in 2..n_max with ``hs`` <= the target family of ``mode``, else None.

    This is only a semi-decision: a ``None`` says nothing about n > n_max.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    if mode not in ("A1", "A2", "Aprime"):
        raise SpecError(f"unknown characterization mode {mode!r}")
    for n in range(2, n_max + 1):
        if family_leq(hs, target_family(mode, n)):
            return n
    return None
