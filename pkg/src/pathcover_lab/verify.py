"""Self-check suites behind ``pathcover-lab verify``.

Each suite returns a list of ``Check`` records. A failing record names the
property and the first offending graph in graph6. Per-graph work can be
spread over a process pool (``PATHCOVER_LAB_THREADS``); results are always
reduced in input order, so reports do not depend on the pool size.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from . import families as fam
from .constructive import (
    HypothesisViolation,
    alpha_sequence,
    bounded_path_cover,
    bounded_path_partition,
    decompose,
    forbidden_family,
    neighborhood_alpha_bound,
    spine_cover,
)
from .freeness import family_leq, find_induced, is_family_free
from .graph import Graph, from_graph6, induced_subgraph_mask, is_connected, neighborhood_mask, to_graph6
from .ramsey import ramsey_upper, verify_ramsey_33
from .sampling import IsoBuckets, gnp, mixed_sample, spine_perturbation
from .solvers import (
    cycle_cover_number,
    cycle_partition_number,
    greedy_cycle_partition,
    greedy_path_partition,
    independence_number,
    maximum_independent_set,
    path_cover_number,
    path_partition_number,
)

SUITES = ("lemmas", "random", "ramsey")


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("PATHCOVER_LAB_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, items: list) -> list:
    workers = min(_threads(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _summarize(name: str, graphs: list[Graph], failures: list[str | None], what: str) -> Check:
    bad = [(g, f) for g, f in zip(graphs, failures) if f]
    if not bad:
        return Check(name, True, f"{len(graphs)} {what}, 0 violations")
    g, f = bad[0]
    return Check(name, False, f"{len(bad)}/{len(graphs)} violations; first at {to_graph6(g)}: {f}")


def _equal(name: str, got, want) -> Check:
    return Check(name, got == want, f"got {got}, expected {want}")


# --- exact values on the named families -------------------------------------

def extremal_checks() -> list[Check]:
    out = []
    for c in (1, 2, 3):
        out.append(_equal(f"pc(K_{{1,{2 * c + 1}}}) = {c + 1}", path_cover_number(fam.generate(fam.S(2 * c + 1)))[0], c + 1))
        out.append(_equal(f"pc(K*_{2 * c + 1}) = {c + 1}", path_cover_number(fam.generate(fam.Kstar(2 * c + 1)))[0], c + 1))
    return out


def h_family_checks(s_values_pc=(2, 3, 4), s_values_pp=(2, 3), t: int = 3) -> list[Check]:
    out = []
    for i in (1, 2):
        for s in s_values_pc:
            want = -(-(s + 1) // 2)
            out.append(_equal(f"pc(H{i}({s},{t})) = ceil((s+1)/2)", path_cover_number(fam.generate(fam.H(i, s, t)))[0], want))
    for i in (3, 4):
        for s in s_values_pp:
            out.append(_equal(f"pp(H{i}({s},{t})) = s", path_partition_number(fam.generate(fam.H(i, s, t)))[0], s))
    return out


def cycle_value_checks() -> list[Check]:
    out = []
    for c in (1, 2, 3):
        out.append(_equal(f"cc(P_{2 * c + 1}) = {c + 1}", cycle_cover_number(fam.generate(fam.P(2 * c + 1)))[0], c + 1))
        out.append(_equal(f"cc(K_{{1,{c + 1}}}) = {c + 1}", cycle_cover_number(fam.generate(fam.S(c + 1)))[0], c + 1))
    return out


def freeness_checks() -> list[Check]:
    kstar3, claw = fam.generate(fam.Kstar(3)), fam.generate(fam.S(3))
    f111 = fam.generate(fam.F(1, 1, 1))
    iso = f111.order == claw.order and f111.size() == claw.size() and find_induced(f111, claw) is not None
    src = [claw, kstar3]
    dst = [fam.generate(s) for s in (fam.S(5), fam.Kstar(5), fam.F(1, 5, 5), fam.F(2, 5, 5))]
    return [
        Check("K*_3 is K_{1,3}-free", find_induced(kstar3, claw) is None, "induced search"),
        Check("F1(1,1) is isomorphic to K_{1,3}", iso, "equal order and size plus an induced embedding"),
        Check("{K_{1,3}, K*_3} <= {K_{1,5}, K*_5, F1(5,5), F2(5,5)}", family_leq(src, dst), "induced search"),
    ]


def constant_checks() -> list[Check]:
    a3 = alpha_sequence(3)
    out = [_equal("alpha_0 for n=3", a3[0], 4), _equal("alpha_1 for n=3", a3[1], 29),
           _equal("alpha_0 for n=2", alpha_sequence(2)[0], 2)]
    rec = all(a3[i] == 2 * ramsey_upper(3, a3[i - 1] + 1).value - 1 for i in range(1, len(a3)))
    out.append(Check("alpha_i recursion for n=3", rec, f"{len(a3)} terms"))
    return out


# --- random-sample properties -----------------------------------------------

def _path_props(g: Graph) -> str | None:
    pc, pp, a = path_cover_number(g)[0], path_partition_number(g)[0], independence_number(g)
    if not pc <= pp <= a:
        return f"pc={pc}, pp={pp}, alpha={a}"
    gp = len(greedy_path_partition(g))
    if gp > a:
        return f"greedy path partition has {gp} > alpha={a} paths"
    return None


def _cycle_props(g: Graph) -> str | None:
    a = independence_number(g)
    greedy = len(greedy_cycle_partition(g))
    bound = ramsey_upper(a + 1, a + 1).value - 1
    if greedy > bound:
        return f"greedy cycle partition {greedy} > R_ub({a + 1},{a + 1}) - 1 = {bound}"
    cp = cycle_partition_number(g)[0]
    if cp > greedy:
        return f"exact cp={cp} > greedy {greedy}"
    return None


def _roundtrip(g: Graph) -> str | None:
    text = to_graph6(g)
    back = from_graph6(text)
    if back != g or to_graph6(back) != text:
        return f"decoded graph differs ({to_graph6(back)})"
    return None


def _subadditive(args: tuple[Graph, int]) -> str | None:
    g, seed = args
    rng = random.Random(seed)
    k = rng.randint(1, g.order)
    label = [rng.randrange(k) for _ in range(g.order)]
    parts = [sum(1 << v for v in range(g.order) if label[v] == b) for b in range(k)]
    parts = [p for p in parts if p]
    pc_sum = sum(path_cover_number(induced_subgraph_mask(g, p)[0])[0] for p in parts)
    pp_sum = sum(path_partition_number(induced_subgraph_mask(g, p)[0])[0] for p in parts)
    pc, pp = path_cover_number(g)[0], path_partition_number(g)[0]
    if pc > pc_sum or pp > pp_sum:
        return f"pc={pc} vs {pc_sum}, pp={pp} vs {pp_sum} over {len(parts)} parts"
    return None


def path_property_check(seed: int, count: int, max_order: int = 9) -> list[Check]:
    gs = list(mixed_sample(seed, count, max_order))
    return [_summarize("pc <= pp <= alpha and greedy path partition <= alpha", gs, _map(_path_props, gs), "graphs")]


def cycle_property_check(seed: int, count: int, max_order: int = 9) -> list[Check]:
    gs = list(mixed_sample(seed, count, max_order))
    return [_summarize("greedy cycle partition <= R_ub(alpha+1, alpha+1) - 1 and cp <= greedy",
                       gs, _map(_cycle_props, gs), "graphs")]


def roundtrip_check(seed: int, count: int, max_order: int = 12) -> list[Check]:
    gs = list(mixed_sample(seed, count, max_order))
    return [_summarize("graph6 round trip", gs, _map(_roundtrip, gs), "graphs")]


def subadditivity_check(seed: int, count: int, max_order: int = 8) -> list[Check]:
    gs = list(mixed_sample(seed, count, max_order))
    fails = _map(_subadditive, [(g, seed * 1_000_003 + i) for i, g in enumerate(gs)])
    return [_summarize("pc and pp are subadditive over vertex partitions", gs, fails, "graphs")]


# --- forbidden-subgraph sweeps ----------------------------------------------

def qualifying_sweep(n: int, seed: int, draws: int, max_order: int, partition: bool = False) -> list[Graph]:
    """Distinct (up to isomorphism) connected graphs free of the forbidden family for ``n``.

    Draws alternate between spine perturbations and G(n, p) with p >= 1/2,
    which is where claw-free graphs live.
    """
    rng = random.Random(seed)
    hs = [h for _, h in forbidden_family(n, partition)]
    seen = IsoBuckets()
    out = []
    for k in range(draws):
        if k % 2 == 0:
            g = spine_perturbation(rng, max_order)
        else:
            g = gnp(rng.randint(1, max_order), 0.5 + rng.random() / 2, rng)
        if not is_connected(g) or not is_family_free(g, hs):
            continue
        if seen.add(g):
            out.append(g)
    return out


def _decomp_props(g: Graph) -> str | None:
    d = decompose(g, 3)
    bad = [k for k in ("layers_terminate", "coverage", "last_slot_empty") if not d.checks[k]]
    return f"failed {', '.join(bad)}" if bad else None


def _cover_props(g: Graph) -> str | None:
    try:
        d = decompose(g, 3)
        sc = spine_cover(g, d, 3)
        if len(sc) > 3:
            return f"spine cover has {len(sc)} > 3 paths"
        system, cert = bounded_path_cover(g, 3)
    except HypothesisViolation as exc:
        return f"hypothesis violated: {exc}"
    pc = path_cover_number(g)[0]
    if not pc <= len(system) <= cert.total_bound:
        return f"cover size {len(system)} outside [{pc}, {cert.total_bound}]"
    return None


def _partition_props(g: Graph) -> str | None:
    try:
        system, cert = bounded_path_partition(g, 3)
    except HypothesisViolation as exc:
        return f"hypothesis violated: {exc}"
    pp = path_partition_number(g)[0]
    bound = 1 + sum(alpha_sequence(3)[1:])
    if not pp <= len(system) <= bound:
        return f"partition size {len(system)} outside [{pp}, {bound}]"
    return None


@lru_cache(maxsize=8)
def _sweep(seed: int, draws: int) -> tuple[Graph, ...]:
    return tuple(qualifying_sweep(3, seed, draws, 9))


def decomposition_checks(seed: int, draws: int, min_instances: int = 200) -> list[Check]:
    """Layer predicates on the n = 3 qualifying sweep (order <= 9)."""
    gs = list(_sweep(seed, draws))
    return [
        Check(f"sweep has >= {min_instances} distinct qualifying graphs (n=3, order <= 9)",
              len(gs) >= min_instances, f"{len(gs)} distinct graphs from {draws} draws"),
        _summarize("layers terminate, Y_(m-n0) empty, layers cover V(G) (n=3)", gs, _map(_decomp_props, gs), "graphs"),
    ]


def pipeline_checks(seed: int, draws: int) -> list[Check]:
    """Bounded cover on the same sweep, bounded partition on its F3/F4-free part."""
    gs = list(_sweep(seed, draws))
    f34 = [fam.generate(fam.F(3, 3, 3)), fam.generate(fam.F(4, 3, 3))]
    sub = [g for g in gs if is_family_free(g, f34)]
    return [
        _summarize("bounded path cover valid, pc <= size <= bound, spine cover <= 3 (n=3)",
                   gs, _map(_cover_props, gs), "graphs"),
        _summarize("bounded path partition valid, pp <= size <= 1 + sum alpha_i (n=3)",
                   sub, _map(_partition_props, sub), "graphs"),
    ]


def _neighborhood_props(args: tuple[Graph, int, int]) -> str | None:
    g, n, seed = args
    rng = random.Random(seed)
    xm = 0
    while not xm:
        xm = sum(1 << v for v in range(g.order) if rng.random() < 0.3)
    nm = neighborhood_mask(g, xm)
    a_x = len(maximum_independent_set(g, xm))
    a_n = len(maximum_independent_set(g, nm)) if nm else 0
    bound = neighborhood_alpha_bound(n, a_x)
    if a_n > bound:
        return f"X={bin(xm)}: alpha(N(X))={a_n} > {bound}"
    return None


def neighborhood_checks(seed: int, count: int, ns=(3, 4), max_order: int = 10) -> list[Check]:
    out = []
    for n in ns:
        rng = random.Random(seed * 31 + n)
        hs = [fam.generate(fam.S(n)), fam.generate(fam.Kstar(n))]
        gs = []
        while len(gs) < count:
            g = gnp(rng.randint(1, max_order), rng.random(), rng)
            if is_family_free(g, hs):
                gs.append(g)
        args = [(g, n, rng.randrange(2**32)) for g in gs]
        out.append(_summarize(f"alpha(N(X)) <= (n-1) R_ub(n, alpha(X)+1) - 1 (n={n})", gs,
                              _map(_neighborhood_props, args), "graphs"))
    return out


# --- Ramsey -----------------------------------------------------------------

def ramsey_checks() -> list[Check]:
    pascal = all(
        ramsey_upper(m, n).value == ramsey_upper(m - 1, n).value + ramsey_upper(m, n - 1).value
        for m in range(2, 9) for n in range(2, 9)
    )
    return [
        Check("R(3,3) = 6 by exhaustion over 2^15 graphs and the C5 witness", verify_ramsey_33(), "brute force"),
        Check("R_ub satisfies Pascal's identity for 2 <= m, n <= 8", pascal, "49 pairs"),
        _equal("R_ub(3,3)", ramsey_upper(3, 3).value, 6),
    ]


# --- suites -----------------------------------------------------------------

def run_suite(suite: str, seed: int = 0, count: int = 200) -> list[Check]:
    """Run one named suite; ``count`` scales the sampled parts."""
    if suite == "lemmas":
        return (extremal_checks() + h_family_checks() + cycle_value_checks() + freeness_checks()
                + constant_checks() + decomposition_checks(seed, 20 * count, min_instances=min(200, count))
                + pipeline_checks(seed, 20 * count)
                + neighborhood_checks(seed, count))
    if suite == "random":
        return (path_property_check(seed, count) + cycle_property_check(seed, count)
                + roundtrip_check(seed, count) + subadditivity_check(seed, count))
    if suite == "ramsey":
        return ramsey_checks()
    raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


__all__ = [
    "Check", "SUITES", "run_suite", "qualifying_sweep", "extremal_checks", "h_family_checks",
    "cycle_value_checks", "freeness_checks", "constant_checks", "path_property_check",
    "cycle_property_check", "roundtrip_check", "subadditivity_check", "decomposition_checks", "pipeline_checks",
    "neighborhood_checks", "ramsey_checks",
]
