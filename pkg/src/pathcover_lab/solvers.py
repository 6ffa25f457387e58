"""Exact path/cycle cover and partition numbers, independence number, and the
two greedy merge procedures (path merging bounded by alpha, cycle merging
bounded by a Ramsey number).

The exact solvers are exponential. They tabulate, for every vertex subset S,
the bitmask of vertices at which a Hamiltonian path of G[S] can end
(Held-Karp style), processing subsets one popcount layer at a time so each
step is a single numpy operation. Orders up to about 20 run in seconds.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .graph import Graph, GraphInputError, bits
from .ramsey import ramsey_upper

EXACT_ORDER_LIMIT = 24

Mode = Literal["cover", "partition"]


class InvalidWitness(ValueError):
    pass


# --- witness types ----------------------------------------------------------

@dataclass(frozen=True)
class PathSystem:
    paths: tuple[tuple[int, ...], ...]
    mode: Mode

    def __len__(self) -> int:
        return len(self.paths)

    def vertex_sets(self) -> list[frozenset[int]]:
        return [frozenset(p) for p in self.paths]

    def validate(self, g: Graph, within: int | None = None) -> None:
        """Raise InvalidWitness unless this is a path cover/partition of ``g``.

        With ``within`` (a vertex bitmask) the system must cover exactly that
        set instead, i.e. be a cover/partition of the induced subgraph.
        """
        target = g.full_mask if within is None else within
        seen = 0
        for p in self.paths:
            if not p:
                raise InvalidWitness("empty path")
            pm = 0
            for v in p:
                if not 0 <= v < g.order:
                    raise InvalidWitness(f"vertex {v} out of range")
                if pm >> v & 1:
                    raise InvalidWitness(f"path {p} repeats vertex {v}")
                pm |= 1 << v
            for a, b in zip(p, p[1:]):
                if not g.has_edge(a, b):
                    raise InvalidWitness(f"path {p} uses non-edge {a}-{b}")
            if self.mode == "partition" and seen & pm:
                raise InvalidWitness(f"path {p} overlaps an earlier path")
            seen |= pm
        if seen & ~target:
            raise InvalidWitness(f"vertices {sorted(bits(seen & ~target))} lie outside the target set")
        if seen != target:
            raise InvalidWitness(f"vertices {sorted(bits(target & ~seen))} are not covered")

    def to_dict(self) -> dict:
        return {"mode": self.mode, "paths": [list(p) for p in self.paths]}


def element_kind(element: tuple[int, ...]) -> str:
    return {1: "K1", 2: "K2"}.get(len(element), "Cycle")


@dataclass(frozen=True)
class CycleSystem:
    """Elements are vertex tuples: length 1 is K1, length 2 is K2 (an edge),
    length >= 3 is a cycle listed in cyclic order."""

    elements: tuple[tuple[int, ...], ...]
    mode: Mode

    def __len__(self) -> int:
        return len(self.elements)

    def validate(self, g: Graph) -> None:
        seen = 0
        for e in self.elements:
            if not e:
                raise InvalidWitness("empty element")
            em = 0
            for v in e:
                if not 0 <= v < g.order:
                    raise InvalidWitness(f"vertex {v} out of range")
                if em >> v & 1:
                    raise InvalidWitness(f"element {e} repeats vertex {v}")
                em |= 1 << v
            if len(e) == 2 and not g.has_edge(*e):
                raise InvalidWitness(f"K2 element {e} is not an edge")
            if len(e) >= 3:
                for a, b in zip(e, e[1:] + e[:1]):
                    if not g.has_edge(a, b):
                        raise InvalidWitness(f"cycle {e} uses non-edge {a}-{b}")
            if self.mode == "partition" and seen & em:
                raise InvalidWitness(f"element {e} overlaps an earlier element")
            seen |= em
        if seen != g.full_mask:
            missing = sorted(bits(g.full_mask & ~seen))
            raise InvalidWitness(f"vertices {missing} are not covered")

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "elements": [{"kind": element_kind(e), "vertices": list(e)} for e in self.elements],
        }


# --- subset tables ----------------------------------------------------------

@lru_cache(maxsize=4)
def _layers(n: int) -> tuple[np.ndarray, ...]:
    """Subset masks of {0..n-1} grouped by popcount."""
    masks = np.arange(1 << n, dtype=np.int64)
    pc = np.zeros(1 << n, dtype=np.int8)
    for v in range(n):
        pc += ((masks >> v) & 1).astype(np.int8)
    order = np.argsort(pc, kind="stable")
    counts = np.bincount(pc, minlength=n + 1)
    return tuple(np.split(order.astype(np.int64), np.cumsum(counts)[:-1]))


def _check_exact(g: Graph) -> None:
    if g.order == 0:
        raise GraphInputError("graph must have at least one vertex")
    if g.order > EXACT_ORDER_LIMIT:
        raise GraphInputError(f"order {g.order} exceeds the exact-solver limit {EXACT_ORDER_LIMIT}")


def _with_bit(layer: np.ndarray, v: int) -> np.ndarray:
    return layer[(layer >> v) & 1 == 1]


def path_end_table(g: Graph) -> np.ndarray:
    """ends[S] = bitmask of v such that G[S] has a Hamiltonian path ending at v."""
    n = g.order
    adj = g.adj
    ends = np.zeros(1 << n, dtype=np.int64)
    layers = _layers(n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for k in range(2, n + 1):
        layer = layers[k]
        for v in range(n):
            sel = _with_bit(layer, v)
            ok = (ends[sel ^ (1 << v)] & adj[v]) != 0
            ends[sel[ok]] |= 1 << v
    return ends


def _path_levels(g: Graph) -> list[np.ndarray]:
    """levels[k-1][S] = ends of the last path over partitions of S into <= k paths.

    Stops at the first level that reaches the full vertex set.
    """
    n = g.order
    adj = g.adj
    full = g.full_mask
    layers = _layers(n)
    levels = [path_end_table(g)]
    while levels[-1][full] == 0:
        prev = levels[-1]
        cur = np.zeros(1 << n, dtype=np.int64)
        for v in range(n):
            cur[1 << v] = 1 << v
        for k in range(2, n + 1):
            layer = layers[k]
            for v in range(n):
                sel = _with_bit(layer, v)
                rest = sel ^ (1 << v)
                ok = ((cur[rest] & adj[v]) != 0) | (prev[rest] != 0)
                cur[sel[ok]] |= 1 << v
        levels.append(cur)
    return levels


def _cycle_levels(g: Graph, max_levels: int | None = None) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """Level tables for cycle partitions.

    open_k[s][S]: ends v of an open element that starts at s (its smallest
    vertex) while the rest of S is split into <= k-1 closed elements.
    closed_k[S]: S splits into <= k elements each a K1, an edge or a cycle.
    An open element s..v closes when v == s or v is adjacent to s.
    """
    n = g.order
    adj = g.adj
    full = g.full_mask
    layers = _layers(n)
    closed_prev = np.zeros(1 << n, dtype=bool)
    closed_prev[0] = True
    opens, closeds = [], []
    while True:
        op = np.zeros((n, 1 << n), dtype=np.int64)
        for k in range(1, n + 1):
            layer = layers[k]
            for s in range(n):
                sel_s = _with_bit(layer, s)
                if not len(sel_s):
                    continue
                ok = closed_prev[sel_s ^ (1 << s)]
                op[s, sel_s[ok]] |= 1 << s
                row = op[s]
                for v in range(s + 1, n):
                    sel = _with_bit(sel_s, v)
                    if not len(sel):
                        continue
                    ok = (row[sel ^ (1 << v)] & adj[v]) != 0
                    row[sel[ok]] |= 1 << v
        closed = closed_prev.copy()
        for s in range(n):
            closed |= (op[s] & (adj[s] | 1 << s)) != 0
        opens.append(op)
        closeds.append(closed)
        if closed[full] or len(opens) == max_levels:
            return opens, closeds
        closed_prev = closed


def _lowbit(m: int) -> int:
    return (m & -m).bit_length() - 1


def hamiltonian_path_of(ends: np.ndarray, adj: tuple[int, ...], sm: int) -> tuple[int, ...]:
    """Recover a Hamiltonian path of G[sm] from an end table."""
    v = _lowbit(int(ends[sm]))
    seq = [v]
    rest = sm ^ (1 << v)
    while rest:
        v = _lowbit(int(ends[rest]) & adj[v])
        seq.append(v)
        rest ^= 1 << v
    return tuple(seq)


def _unwind_open(op: np.ndarray, adj: tuple[int, ...], s: int, v: int, sm: int) -> tuple[list[int], int]:
    """Walk an open element back from end ``v`` to its start ``s``.

    Returns the element (start first) and the leftover vertex mask.
    """
    seq = [v]
    while v != s:
        sm ^= 1 << v
        v = _lowbit(int(op[s, sm]) & adj[v])
        seq.append(v)
    return seq[::-1], sm ^ (1 << s)


def _canonical_cycle(seq: list[int]) -> tuple[int, ...]:
    if len(seq) <= 2:
        return tuple(sorted(seq))
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[-1] < rot[1]:
        rot = rot[:1] + rot[1:][::-1]
    return tuple(rot)


def _closing_pair(op: np.ndarray, adj: tuple[int, ...], sm: int) -> tuple[int, int]:
    n = op.shape[0]
    for s in range(n):
        m = int(op[s, sm]) & (adj[s] | 1 << s)
        if m:
            return s, _lowbit(m)
    raise AssertionError("no closing element for a closed mask")


def _maximal(table_ok: np.ndarray, n: int) -> list[int]:
    """Inclusion-maximal masks among those flagged true in ``table_ok``."""
    masks = np.arange(1 << n, dtype=np.int64)
    is_max = table_ok.copy()
    for v in range(n):
        without = (masks >> v) & 1 == 0
        is_max[without] &= ~table_ok[masks[without] | (1 << v)]
    return [int(m) for m in np.flatnonzero(is_max)]


def _min_set_cover(full: int, sets: list[int]) -> list[int]:
    """Fewest members of ``sets`` whose union is ``full`` (iterative deepening)."""
    n = full.bit_length()
    by_vertex = [sorted((s for s in sets if s >> v & 1), key=lambda s: (-s.bit_count(), s)) for v in range(n)]
    biggest = max(s.bit_count() for s in sets)

    def search(covered: int, k: int, failed: set) -> list[int] | None:
        if covered == full:
            return []
        left = full & ~covered
        if k == 0 or left.bit_count() > k * biggest:
            return None
        if (covered, k) in failed:
            return None
        v = _lowbit(left)
        tried = set()
        for s in by_vertex[v]:
            gain = s & left
            if gain in tried:
                continue
            tried.add(gain)
            sub = search(covered | s, k - 1, failed)
            if sub is not None:
                return [s] + sub
        failed.add((covered, k))
        return None

    for k in range(1, n + 1):
        found = search(0, k, set())
        if found is not None:
            return found
    raise AssertionError("singletons always give a cover")


# --- exact invariants -------------------------------------------------------

def maximum_independent_set(g: Graph, within: int | None = None) -> frozenset[int]:
    adj = g.adj
    cache: dict[int, int] = {}

    def best(mask: int) -> int:
        if not mask:
            return 0
        hit = cache.get(mask)
        if hit is not None:
            return hit
        # Branch on a minimum-degree vertex v: some maximum set meets N[v].
        v = min(bits(mask), key=lambda u: (adj[u] & mask).bit_count())
        # With deg(v) <= 1, taking v itself is never worse.
        branch = 1 << v if (adj[v] & mask).bit_count() <= 1 else (adj[v] & mask) | 1 << v
        out = 0
        for u in bits(branch):
            cand = best(mask & ~adj[u] & ~(1 << u)) | 1 << u
            if cand.bit_count() > out.bit_count():
                out = cand
        cache[mask] = out
        return out

    return frozenset(bits(best(g.full_mask if within is None else within)))


def independence_number(g: Graph) -> int:
    return len(maximum_independent_set(g))


def has_hamiltonian_path(g: Graph) -> bool:
    if g.order == 0:
        return False
    _check_exact(g)
    return bool(path_end_table(g)[g.full_mask])


def path_cover_number(g: Graph) -> tuple[int, PathSystem]:
    """pc(G) with a witness; paths in a cover may share vertices."""
    _check_exact(g)
    ends = path_end_table(g)
    chosen = _min_set_cover(g.full_mask, _maximal(ends != 0, g.order))
    system = PathSystem(tuple(hamiltonian_path_of(ends, g.adj, s) for s in chosen), "cover")
    system.validate(g)
    return len(system), system


def path_partition_number(g: Graph) -> tuple[int, PathSystem]:
    """pp(G) with a witness partition into vertex-disjoint paths."""
    _check_exact(g)
    adj = g.adj
    levels = _path_levels(g)
    k = len(levels)
    rest = g.full_mask
    paths = []
    v = _lowbit(int(levels[k - 1][rest]))
    cur = [v]
    while True:
        rest ^= 1 << v
        if not rest:
            paths.append(tuple(cur))
            break
        nxt = int(levels[k - 1][rest]) & adj[v]
        if nxt:
            v = _lowbit(nxt)
            cur.append(v)
        else:
            paths.append(tuple(cur))
            k -= 1
            v = _lowbit(int(levels[k - 1][rest]))
            cur = [v]
    system = PathSystem(tuple(p[::-1] for p in reversed(paths)), "partition")
    system.validate(g)
    return len(system), system


def cycle_cover_number(g: Graph) -> tuple[int, CycleSystem]:
    """cc(G): fewest K1/K2/cycle subgraphs covering V(G), overlaps allowed."""
    _check_exact(g)
    opens, closeds = _cycle_levels(g, max_levels=1)
    closed = closeds[0].copy()
    closed[0] = False
    chosen = _min_set_cover(g.full_mask, _maximal(closed, g.order))
    elems = []
    for sm in chosen:
        s, v = _closing_pair(opens[0], g.adj, sm)
        seq, _ = _unwind_open(opens[0], g.adj, s, v, sm)
        elems.append(_canonical_cycle(seq))
    system = CycleSystem(tuple(elems), "cover")
    system.validate(g)
    return len(system), system


def cycle_partition_number(g: Graph) -> tuple[int, CycleSystem]:
    """cp(G): fewest vertex-disjoint K1/K2/cycle subgraphs covering V(G)."""
    _check_exact(g)
    adj = g.adj
    opens, closeds = _cycle_levels(g)
    k = len(opens)
    rest = g.full_mask
    elems = []
    while rest:
        s, v = _closing_pair(opens[k - 1], adj, rest)
        seq, rest = _unwind_open(opens[k - 1], adj, s, v, rest)
        elems.append(_canonical_cycle(seq))
        k -= 1
    system = CycleSystem(tuple(elems), "partition")
    system.validate(g)
    return len(system), system


# --- greedy procedures ------------------------------------------------------

def greedy_path_partition(g: Graph) -> PathSystem:
    """Merge paths along edges between their endvertices until stuck.

    Starts from singletons. At each step the lexicographically least pair of
    path indices (i, j) having adjacent endvertices a (of path i) and b (of
    path j) is joined through ab; the least such (a, b) is used. When no merge
    applies, picking one endvertex per path gives an independent set, so the
    number of paths is at most alpha(G).
    """
    if g.order == 0:
        raise GraphInputError("graph must have at least one vertex")
    adj = g.adj
    paths = [[v] for v in range(g.order)]
    while True:
        hit = None
        for i in range(len(paths)):
            ei = sorted({paths[i][0], paths[i][-1]})
            for j in range(i + 1, len(paths)):
                ej = sorted({paths[j][0], paths[j][-1]})
                pairs = [(a, b) for a in ei for b in ej if adj[a] >> b & 1]
                if pairs:
                    hit = i, j, pairs[0]
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, (a, b) = hit
        qi = paths[i] if paths[i][-1] == a else paths[i][::-1]
        qj = paths[j] if paths[j][0] == b else paths[j][::-1]
        paths[i] = qi + qj
        del paths[j]
    system = PathSystem(tuple(tuple(p) for p in paths), "partition")
    system.validate(g)
    return system


def _least_edge(elem: tuple[int, ...]) -> tuple[int, int]:
    if len(elem) == 1:
        return elem[0], elem[0]
    if len(elem) == 2:
        return min(elem), max(elem)
    return min(tuple(sorted(p)) for p in zip(elem, elem[1:] + elem[:1]))


def _path_through(elem: tuple[int, ...], x: int, y: int) -> list[int]:
    """Spanning path of an element from x to y, where xy is an edge of it (or x == y for K1)."""
    if len(elem) == 1:
        return [x]
    if len(elem) == 2:
        return [x, y]
    p = elem.index(x)
    fwd = list(elem[p:] + elem[:p])
    if fwd[1] == y:
        return [x] + fwd[1:][::-1]
    return fwd


def greedy_cycle_partition(g: Graph, start: CycleSystem | None = None,
                           anchors: list[tuple[int, int]] | None = None) -> CycleSystem:
    """Merge K1/K2/cycle elements pairwise until stuck.

    Every element carries an anchor pair (x, y) forming one of its edges
    (x == y for a K1). Elements i < j merge when x_i x_j and y_i y_j are both
    edges (the anchors of j may be read in either order); the union is then
    spanned by the cycle x_i .. y_i y_j .. x_j, or an edge when both were K1.
    A merged element is anchored at its least edge. A stuck partition has at
    most R(alpha+1, alpha+1) - 1 elements.

    ``start`` defaults to all singletons; ``anchors`` overrides the default
    anchors (least edge) of the starting elements.
    """
    if g.order == 0:
        raise GraphInputError("graph must have at least one vertex")
    adj = g.adj
    if start is None:
        start = CycleSystem(tuple((v,) for v in range(g.order)), "partition")
    if start.mode != "partition":
        raise ValueError("greedy_cycle_partition needs a starting partition")
    start.validate(g)
    elems = [tuple(e) for e in start.elements]
    anc = list(anchors) if anchors is not None else [_least_edge(e) for e in elems]
    if len(anc) != len(elems):
        raise ValueError("one anchor pair per starting element is required")
    for e, (x, y) in zip(elems, anc):
        if x not in e or y not in e or (x != y and not adj[x] >> y & 1) or (x == y and len(e) > 1):
            raise ValueError(f"anchor {(x, y)} is not an edge of element {e}")
    while True:
        hit = None
        for i in range(len(elems)):
            xi, yi = anc[i]
            for j in range(i + 1, len(elems)):
                xj, yj = anc[j]
                if adj[xi] >> xj & 1 and adj[yi] >> yj & 1:
                    hit = i, j, xj, yj
                elif adj[xi] >> yj & 1 and adj[yi] >> xj & 1:
                    hit = i, j, yj, xj
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, xj, yj = hit
        xi, yi = anc[i]
        seq = _path_through(elems[i], xi, yi) + _path_through(elems[j], yj, xj)
        merged = _canonical_cycle(seq) if len(seq) >= 3 else tuple(sorted(seq))
        elems[i] = merged
        anc[i] = _least_edge(merged)
        del elems[j], anc[j]
    system = CycleSystem(tuple(elems), "partition")
    system.validate(g)
    return system


def cycle_partition_bound(g: Graph) -> int:
    """R_ub(alpha+1, alpha+1) - 1, the ceiling for a merge-stuck cycle partition."""
    a = independence_number(g)
    return ramsey_upper(a + 1, a + 1).value - 1
