"""Generators for the named graph families.

Vertex labellings are fixed so that tests and callers can address named
vertices by formula:

* ``Complete(n)``, ``Path(n)``, ``Cycle(n)``: vertices 0..n-1, the path and
  cycle run 0-1-...-(n-1).
* ``Star(n)`` is K_{1,n} (order n+1): centre 0, leaves 1..n.
* ``KStar(m)``: clique vertex x_i -> i-1, its pendant y_i -> m+i-1.
* ``F1..F4(m, n)``: x_1 -> 0, x_2 -> 1, y_i -> 1+i, z_i -> 1+m+i.
* ``H1..H4(s, t)``: path vertex u_i^(j) -> (i-1)t + (j-1),
  v_i -> st + 2(i-1), w_i -> st + 2(i-1) + 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph


class SpecError(ValueError):
    pass


_ARITY = {
    "Complete": 1, "Path": 1, "Cycle": 1, "Star": 1, "KStar": 1,
    "F1": 2, "F2": 2, "F3": 2, "F4": 2,
    "H1": 2, "H2": 2, "H3": 2, "H4": 2,
}

_TEXT_NAMES = {
    "k": "Complete", "p": "Path", "c": "Cycle", "s": "Star", "kstar": "KStar",
    "f1": "F1", "f2": "F2", "f3": "F3", "f4": "F4",
    "h1": "H1", "h2": "H2", "h3": "H3", "h4": "H4",
}
_SHORT = {"Complete": "K", "Path": "P", "Cycle": "C", "Star": "S", "KStar": "Kstar"}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in _ARITY:
            raise SpecError(f"unknown family kind {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise SpecError(f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}")
        k, p = self.kind, self.params
        if k == "Cycle":
            if p[0] < 3:
                raise SpecError(f"Cycle needs n >= 3, got {p[0]}")
        elif k in ("Complete", "Path", "Star", "KStar"):
            if p[0] < 1:
                raise SpecError(f"{k} needs a parameter >= 1, got {p[0]}")
        elif k.startswith("F"):
            if p[0] < 1 or p[1] < 1:
                raise SpecError(f"{k} needs m >= 1 and n >= 1, got {p}")
        else:
            if p[0] < 2:
                raise SpecError(f"{k} needs s >= 2, got s={p[0]}")
            if p[1] < 3:
                raise SpecError(f"{k} needs t >= 3, got t={p[1]}")

    def __str__(self) -> str:
        name = _SHORT.get(self.kind, self.kind)
        return f"{name}({','.join(map(str, self.params))})"


# Convenience constructors.
def K(n): return FamilySpec("Complete", (n,))
def P(n): return FamilySpec("Path", (n,))
def C(n): return FamilySpec("Cycle", (n,))
def S(n): return FamilySpec("Star", (n,))
def Kstar(m): return FamilySpec("KStar", (m,))
def F(i, m, n): return FamilySpec(f"F{i}", (m, n))
def H(i, s, t): return FamilySpec(f"H{i}", (s, t))


_SPEC_RE = re.compile(r"^([a-z]+[0-9]?)\((\d+)(?:,(\d+))?\)$")


def parse_spec(text: str) -> FamilySpec:
    """Parse CLI syntax such as ``K(3)``, ``kstar(4)`` or ``H3(2, 3)``."""
    compact = re.sub(r"\s+", "", text).lower()
    m = _SPEC_RE.match(compact)
    if not m or m.group(1) not in _TEXT_NAMES:
        raise SpecError(f"cannot parse family spec {text!r}")
    params = tuple(int(g) for g in m.groups()[1:] if g is not None)
    return FamilySpec(_TEXT_NAMES[m.group(1)], params)


def looks_like_spec(text: str) -> bool:
    return "(" in text


def _f_edges(kind: str, m: int, n: int) -> list[tuple[int, int]]:
    x1, x2 = 0, 1
    y = lambda i: 1 + i
    z = lambda i: 1 + m + i
    if kind in ("F1", "F2"):
        edges = [(x1, x2), (x1, y(1)), (x1, z(1))]
    else:
        edges = [(x1, y(1)), (x1, z(1)), (x2, y(1)), (x2, z(1))]
    edges += [(y(i), y(i + 1)) for i in range(1, m)]
    edges += [(z(i), z(i + 1)) for i in range(1, n)]
    if kind in ("F2", "F4"):
        edges.append((y(1), z(1)))
    return edges


def _h_edges(kind: str, s: int, t: int) -> list[tuple[int, int]]:
    u = lambda i, j: (i - 1) * t + (j - 1)
    v = lambda i: s * t + 2 * (i - 1)
    w = lambda i: s * t + 2 * (i - 1) + 1
    edges = [(u(i, j), u(i, j + 1)) for i in range(1, s + 1) for j in range(1, t)]
    for i in range(1, s):
        if kind in ("H1", "H2"):
            edges += [(v(i), w(i)), (v(i), u(i, t)), (v(i), u(i + 1, 1))]
        else:
            edges += [(v(i), u(i, t)), (v(i), u(i + 1, 1)), (w(i), u(i, t)), (w(i), u(i + 1, 1))]
        if kind in ("H2", "H4"):
            edges.append((u(i, t), u(i + 1, 1)))
    return edges


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "Complete":
        n = p[0]
        return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if k == "Path":
        return Graph(p[0], [(i, i + 1) for i in range(p[0] - 1)])
    if k == "Cycle":
        n = p[0]
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if k == "Star":
        return Graph(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if k == "KStar":
        m = p[0]
        edges = [(i, j) for i in range(m) for j in range(i + 1, m)]
        edges += [(i, m + i) for i in range(m)]
        return Graph(2 * m, edges)
    if k.startswith("F"):
        m, n = p
        return Graph(m + n + 2, _f_edges(k, m, n))
    s, t = p
    return Graph(s * t + 2 * (s - 1), _h_edges(k, s, t))


def order_and_size(spec: FamilySpec | str) -> tuple[int, int]:
    """Closed-form (|V|, |E|) of a family member, without building it."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p = spec.kind, spec.params
    if k == "Complete":
        return p[0], p[0] * (p[0] - 1) // 2
    if k == "Path":
        return p[0], p[0] - 1
    if k == "Cycle":
        return p[0], p[0]
    if k == "Star":
        return p[0] + 1, p[0]
    if k == "KStar":
        m = p[0]
        return 2 * m, m * (m - 1) // 2 + m
    if k.startswith("F"):
        m, n = p
        size = {"F1": m + n + 1, "F2": m + n + 2, "F3": m + n + 2, "F4": m + n + 3}[k]
        return m + n + 2, size
    s, t = p
    size = s * (t - 1) + (3 if k in ("H1", "H2") else 4) * (s - 1)
    if k in ("H2", "H4"):
        size += s - 1
    return s * t + 2 * (s - 1), size


def target_family(mode: str, n: int) -> list[Graph]:
    """Forbidden families bounding pc (``A1``), pp (``A2``) and cc/cp (``Aprime``)."""
    if mode == "A1":
        specs = [S(n), Kstar(n), F(1, n, n), F(2, n, n)]
    elif mode == "A2":
        specs = [S(n), Kstar(n), F(1, n, n), F(2, n, n), F(3, n, n), F(4, n, n)]
    elif mode == "Aprime":
        specs = [S(n), Kstar(n), P(n)]
    else:
        raise SpecError(f"unknown characterization mode {mode!r}")
    return [generate(s) for s in specs]
