import random

import pytest

import oracles
from pathcover_lab.constructive import (
    CoverCertificate,
    HypothesisViolation,
    alpha_sequence,
    bounded_path_cover,
    bounded_path_partition,
    cycle_alpha_bound,
    cycle_partition_constant,
    decompose,
    forbidden_family,
    longest_induced_path,
    neighborhood_alpha_bound,
    spine_cover,
    spine_hamiltonian,
    spine_offset,
)
from pathcover_lab.families import C, K, Kstar, P, S, generate
from pathcover_lab.freeness import is_family_free
from pathcover_lab.graph import Graph, GraphInputError, add_vertices, disjoint_union, is_connected, neighborhood_mask
from pathcover_lab.ramsey import ramsey_upper
from pathcover_lab.solvers import independence_number, path_cover_number, path_partition_number
from pathcover_lab.verify import qualifying_sweep


# --- constants --------------------------------------------------------------

def test_spine_offset():
    assert [spine_offset(n) for n in (2, 3, 4, 5, 6)] == [2, 3, 5, 9, 14]


def test_alpha_sequence():
    a = alpha_sequence(3)
    assert a[:2] == [4, 29] and len(a) == 6
    assert alpha_sequence(2) == [2, 2, 2, 2]
    for n in (2, 3, 4):
        seq = alpha_sequence(n)
        assert len(seq) == 2 * spine_offset(n)
        assert seq[0] == 2 * -(-spine_offset(n) // 2)
        for i in range(1, len(seq)):
            assert seq[i] == (n - 1) * ramsey_upper(n, seq[i - 1] + 1).value - 1
            if i > 1:
                assert seq[i] >= seq[i - 1]
    with pytest.raises(ValueError):
        alpha_sequence(1)


def test_cycle_constants():
    assert cycle_alpha_bound(2) == 1
    assert cycle_alpha_bound(3) == 1 + neighborhood_alpha_bound(3, 1)
    c = cycle_alpha_bound(3)
    assert cycle_partition_constant(3) == ramsey_upper(c + 1, c + 1).value - 1
    rng = random.Random(8)
    for n in (3, 4):
        hs = [generate(S(n)), generate(Kstar(n)), generate(P(n))]
        for _ in range(300):
            g = oracles.random_graph(rng, rng.randint(1, 9), rng.random())
            if is_connected(g) and is_family_free(g, hs):
                assert independence_number(g) <= cycle_alpha_bound(n)


# --- longest induced path ---------------------------------------------------

def brute_longest_induced(g):
    seqs = oracles.induced_path_sequences(g)
    best = max(len(s) for s in seqs)
    return min(s for s in seqs if len(s) == best and s[0] <= s[-1])


def test_longest_induced_path_examples():
    assert longest_induced_path(generate(P(7))) == tuple(range(7))
    assert longest_induced_path(generate(K(5))) == (0, 1)
    assert len(longest_induced_path(generate(C(6)))) == 5
    assert longest_induced_path(Graph(1)) == (0,)
    with pytest.raises(GraphInputError):
        longest_induced_path(Graph(0))


def test_longest_induced_path_against_brute_force():
    rng = random.Random(12)
    for _ in range(150):
        g = oracles.random_graph(rng, rng.randint(1, 8), rng.random())
        assert longest_induced_path(g) == brute_longest_induced(g), g


# --- decomposition ----------------------------------------------------------

def check_partition(g, d):
    pm = sum(1 << v for v in d.spine)
    ym = sum(1 << v for v in d.y)
    blocks = [pm, ym] + [sum(1 << v for v in x) for x in d.x_layers[1:]]
    union = 0
    for b in blocks:
        assert not union & b
        union |= b
    if d.coverage and d.layers_terminate:
        assert union == g.full_mask
    x0 = sum(1 << v for v in d.x_layers[0])
    assert x0 & ~pm == 0
    # Y = N(V(P) minus X0) minus (X0 u N(X0))
    assert ym == neighborhood_mask(g, pm & ~x0) & ~(x0 | neighborhood_mask(g, x0))
    for i, ys in d.y_slots.items():
        assert d.y_split[(i, 1)] | d.y_split[(i, 2)] == ys
        assert not d.y_split[(i, 1)] & d.y_split[(i, 2)]
        assert all(g.has_edge(y, d.u(i + 1)) for y in d.y_split[(i, 1)])
    assert sum(len(s) for s in d.y_slots.values()) == len(d.y)


def test_decompose_examples():
    d = decompose(generate(P(9)), 3)
    assert d.spine == tuple(range(9)) and d.n0 == 3
    assert d.x_layers[0] == {0, 1, 2, 6, 7, 8}
    assert not d.y and not any(d.x_layers[1:])
    d = decompose(generate(S(2)), 3)
    assert d.m == 3 and d.x_layers[0] == {0, 1, 2} and not d.y
    g = add_vertices(generate(P(9)), [[4, 5]])
    d = decompose(g, 3)
    assert d.y == {9} and d.y_slots[5] == {9} and d.y_split[(5, 1)] == {9}
    assert not d.failed_checks()
    check_partition(g, d)
    with pytest.raises(GraphInputError):
        decompose(disjoint_union(generate(P(3)), generate(P(3))), 3)
    with pytest.raises(ValueError):
        decompose(generate(P(3)), 1)


def spider(legs, length):
    edges, order = [], 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, order))
            prev, order = order, order + 1
    return Graph(order, edges)


def test_decompose_reports_failures_on_non_free_input():
    g = spider(3, 4)   # contains a claw; the third leg hangs off the spine middle
    d = decompose(g, 3)
    assert "coverage" in d.failed_checks()
    assert not d.checks["coverage"]
    with pytest.raises(HypothesisViolation) as info:
        bounded_path_cover(g, 3)
    assert info.value.prop in ("coverage", "layers_terminate", "slot_shape", "last_slot_empty")


def test_lemma_predicates_on_qualifying_graphs():
    for n, order in ((3, 12), (4, 12)):
        gs = qualifying_sweep(n, seed=5, draws=600, max_order=order)
        assert len(gs) > 50
        for g in gs:
            d = decompose(g, n)
            assert not d.failed_checks(), (g, d.checks)
            check_partition(g, d)


# --- spine cover and Hamiltonian spine --------------------------------------

def test_spine_examples():
    g = generate(P(9))
    d = decompose(g, 3)
    assert spine_cover(g, d, 3).paths == (tuple(range(9)),)
    assert spine_hamiltonian(g, d, 3) == tuple(range(9))
    g = add_vertices(generate(P(9)), [[4, 5]])
    d = decompose(g, 3)
    sc = spine_cover(g, d, 3)
    assert len(sc) <= 3 and path_cover_number(g)[0] <= len(sc)
    assert spine_hamiltonian(g, d, 3) == (0, 1, 2, 3, 4, 9, 5, 6, 7, 8)
    g = add_vertices(generate(P(9)), [[4, 5], [4, 5, 9]])
    d = decompose(g, 4)
    # n = 4 has n0 = 5, so a 9-vertex spine has no middle and the extras sit in X1
    assert spine_hamiltonian(g, d, 4) == tuple(range(9))
    g = add_vertices(generate(P(13)), [[5, 6], [5, 6, 13]])
    d = decompose(g, 4)
    assert d.y == {13, 14}
    assert spine_hamiltonian(g, d, 4) == (0, 1, 2, 3, 4, 5, 13, 14, 6, 7, 8, 9, 10, 11, 12)


def test_spine_cover_uses_skip_slots():
    # y adjacent to u6 and u8 only: Y_(6,2), a connector skipping u7
    g = add_vertices(generate(P(13)), [[5, 7]])
    d = decompose(g, 4)
    assert d.y_split[(6, 2)] == {13}
    sc = spine_cover(g, d, 4)
    sc.validate(g)
    assert len(sc) <= 3 * 4 - 6
    assert (0, 1, 2, 3, 4, 5, 13, 7, 8, 9, 10, 11, 12) in sc.paths
    with pytest.raises(HypothesisViolation) as info:
        spine_hamiltonian(g, d, 4)
    assert info.value.prop == "slot_clique"


def test_n2_instance():
    g = generate(P(6))
    d = decompose(g, 2)
    assert len(spine_cover(g, d, 2)) == 1


def test_spine_cover_bound_on_sweeps():
    for n, order in ((3, 13), (4, 14)):
        for g in qualifying_sweep(n, seed=1, draws=800, max_order=order):
            d = decompose(g, n)
            sc = spine_cover(g, d, n)
            assert len(sc) <= max(3 * n - 6, 1)
            mask = sum(1 << v for v in d.spine) | sum(1 << v for v in d.y)
            sc.validate(g, within=mask)


# --- full pipeline ----------------------------------------------------------

def test_bounded_examples():
    system, cert = bounded_path_cover(generate(P(9)), 3)
    assert len(system) == 1
    assert cert.total_bound == 3 + sum(alpha_sequence(3)[1:])
    assert isinstance(cert, CoverCertificate) and cert.size == 1
    assert len(bounded_path_cover(generate(Kstar(2)), 3)[0]) == 1
    system, cert = bounded_path_partition(add_vertices(generate(P(9)), [[4, 5]]), 3)
    assert system.paths == ((0, 1, 2, 3, 4, 9, 5, 6, 7, 8),)
    assert cert.total_bound == 1 + sum(alpha_sequence(3)[1:])
    assert len(bounded_path_partition(generate(P(4)), 2)[0]) == 1


def test_freeness_flag():
    with pytest.raises(HypothesisViolation) as info:
        bounded_path_cover(generate(S(3)), 3, check_freeness=True)
    assert "input contains induced K_{1,3}" in str(info.value)
    with pytest.raises(GraphInputError):
        bounded_path_cover(Graph(2), 3)
    names = [name for name, _ in forbidden_family(3, partition=True)]
    assert names == ["K_{1,3}", "K*_3", "F1_{3,3}", "F2_{3,3}", "F3_{3,3}", "F4_{3,3}"]


def test_pipeline_against_exact_solvers():
    f34 = [h for name, h in forbidden_family(3, partition=True)[4:]]
    gs = qualifying_sweep(3, seed=3, draws=1500, max_order=12)
    assert len(gs) > 100
    for g in gs:
        system, cert = bounded_path_cover(g, 3, check_freeness=True)
        system.validate(g)
        assert path_cover_number(g)[0] <= len(system) == cert.size <= cert.total_bound
        assert len(cert.layer_part_counts) == 2 * spine_offset(3) - 1
        if is_family_free(g, f34):
            system, cert = bounded_path_partition(g, 3, check_freeness=True)
            system.validate(g)
            assert system.mode == "partition"
            assert path_partition_number(g)[0] <= len(system) <= cert.total_bound


def test_certificate_to_dict_handles_big_numbers():
    _, cert = bounded_path_cover(generate(P(5)), 4)
    d = cert.to_dict()
    assert d["total_bound"] == cert.total_bound and d["size"] == 1
    assert d["total_bound"].bit_length() > 10_000
