import itertools

import numpy as np
import pytest

from squashcube.errors import CapabilityError, DisconnectedGraphError, Graph6ParseError
from squashcube.graphs import (
    Graph,
    all_graphs,
    automorphisms,
    bfs_distances,
    canonical_form,
    complete_graph,
    complete_multipartite,
    connected_graphs,
    cycle_graph,
    emit_graph6,
    is_connected,
    johnson_graph,
    johnson_subsets,
    kam_graph,
    parse_graph6,
    path_graph,
    petersen_graph,
    random_graph,
)
from oracles import simple_bfs_all_pairs


def test_graph_rejects_self_loops_and_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_johnson_n4_k1_is_complete():
    g = johnson_graph(4, 1)
    assert g.n == 4 and g.num_edges == 6


def test_johnson_n5_k2_degrees_brute_force():
    # independent count: pairs of 2-subsets of [5] sharing exactly one element
    subsets = list(itertools.combinations(range(1, 6), 2))
    degree = {
        s: sum(1 for t in subsets if t != s and len(set(s) & set(t)) == 1)
        for s in subsets
    }
    assert set(degree.values()) == {6}
    g = johnson_graph(5, 2)
    assert g.n == 10 and all(g.degree(v) == 6 for v in range(10))


def test_johnson_n6_k3_diameter_via_independent_bfs():
    subsets = johnson_subsets(6, 3)
    edges = [
        (i, j)
        for i, j in itertools.combinations(range(len(subsets)), 2)
        if len(set(subsets[i]) & set(subsets[j])) == 2
    ]
    rows = simple_bfs_all_pairs(len(subsets), edges)
    assert max(max(r) for r in rows) == 3
    assert bfs_distances(johnson_graph(6, 3)).max() == 3


def test_johnson_parameter_validation():
    with pytest.raises(ValueError):
        johnson_graph(4, 0)
    with pytest.raises(ValueError):
        johnson_graph(4, 5)


def test_johnson_subsets_colex_matches_published_order():
    assert johnson_subsets(5, 2) == [
        (1, 2), (1, 3), (2, 3), (1, 4), (2, 4),
        (3, 4), (1, 5), (2, 5), (3, 5), (4, 5),
    ]


def test_johnson_complement_isomorphism():
    # J(n,k) and J(n,n-k) via the explicit complement bijection
    for n in range(2, 8):
        for k in range(1, n):
            a = johnson_graph(n, k)
            b = johnson_graph(n, n - k)
            subs_b = {s: i for i, s in enumerate(johnson_subsets(n, n - k))}
            full = set(range(1, n + 1))
            mapping = [
                subs_b[tuple(sorted(full - set(s)))] for s in johnson_subsets(n, k)
            ]
            for u, v in a.edges:
                assert b.has_edge(mapping[u], mapping[v])
            assert a.num_edges == b.num_edges


def test_cycle_basics():
    c5 = cycle_graph(5)
    assert all(c5.degree(v) == 2 for v in range(5))
    assert bfs_distances(c5).max() == 2
    assert bfs_distances(cycle_graph(13)).max() == 6
    assert bfs_distances(cycle_graph(4))[0][2] == 2
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_complete_multipartite():
    assert complete_multipartite([2, 2, 1]).num_edges == 8
    assert complete_multipartite([1, 1, 1]) == complete_graph(3)
    g = kam_graph(4, 4)
    assert g.n == 16 and g.num_edges == 96
    with pytest.raises(ValueError):
        complete_multipartite([2, 0])
    with pytest.raises(ValueError):
        complete_multipartite([3])


def test_multipartite_distances():
    d = bfs_distances(complete_multipartite([2, 3]))
    assert d[0][1] == 2 and d[0][2] == 1


def test_random_graph_determinism_and_statistics():
    assert random_graph(1, 0).num_edges == 0
    for seed in (0, 1, 2):
        g1, g2 = random_graph(64, seed), random_graph(64, seed)
        assert g1 == g2
        # 2016 coin flips at p = 1/2: mean 1008, sigma ~22.4
        assert abs(g1.num_edges - 1008) <= 90
    assert random_graph(20, 0) != random_graph(20, 1)
    with pytest.raises(ValueError):
        random_graph(0, 0)


def test_bfs_small_cases():
    d = bfs_distances(complete_graph(4))
    assert d.sum() == 12 and d.max() == 1
    d = bfs_distances(cycle_graph(5))
    assert set(np.unique(d)) == {0, 1, 2}
    assert all(row.sum() == 6 for row in d)


def test_bfs_johnson_antipodal_pair():
    subs = johnson_subsets(6, 3)
    d = bfs_distances(johnson_graph(6, 3))
    assert d[subs.index((1, 2, 3))][subs.index((4, 5, 6))] == 3


def test_bfs_disconnected_names_a_pair():
    with pytest.raises(DisconnectedGraphError) as exc:
        bfs_distances(Graph(4, [(0, 1), (2, 3)]))
    u, v = exc.value.pair
    assert u in (0, 1) and v in (2, 3)


def test_bfs_triangle_inequality():
    graphs = [random_graph(18, seed) for seed in range(6)] + [random_graph(30, 1)]
    for g in graphs:
        if not is_connected(g):
            continue
        d = [[int(x) for x in row] for row in bfs_distances(g)]
        n = g.n
        for u in range(n):
            for v in range(n):
                duv = d[u][v]
                for w in range(n):
                    assert d[u][w] <= duv + d[v][w]


def test_graph6_hand_decoded_examples():
    g = parse_graph6("C~")
    assert g == complete_graph(4)
    # 'A_' carries bits 100000: the single pair (0,1) is an edge
    g = parse_graph6("A_")
    assert g.n == 2 and g.edges == ((0, 1),)
    g = parse_graph6("A?")
    assert g.n == 2 and g.num_edges == 0
    assert parse_graph6(b">>graph6<<C~") == complete_graph(4)


def test_graph6_cross_check_against_networkx():
    nx = pytest.importorskip("networkx")
    for seed in range(12):
        g = random_graph(int(np.random.default_rng(seed).integers(2, 30)), seed)
        line = emit_graph6(g)
        h = nx.from_graph6_bytes(line)
        assert set(g.edges) == {tuple(sorted(e)) for e in h.edges()}
        assert parse_graph6(nx.to_graph6_bytes(h, header=False).strip()) == g


def test_graph6_roundtrip():
    for seed in range(10):
        for n in (1, 2, 5, 13, 20):
            g = random_graph(n, seed * 31 + n)
            assert parse_graph6(emit_graph6(g)) == g


def test_graph6_large_n_header():
    g = random_graph(70, 5)
    line = emit_graph6(g)
    assert line[0] == 126
    assert parse_graph6(line) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6ParseError):
        parse_graph6("")
    with pytest.raises(Graph6ParseError) as exc:
        parse_graph6("C~~")  # trailing byte
    assert exc.value.offset == 1
    with pytest.raises(Graph6ParseError):
        parse_graph6("C")  # truncated adjacency bits
    with pytest.raises(Graph6ParseError):
        parse_graph6(bytes([30, 63]))  # header byte out of range
    with pytest.raises(Graph6ParseError):
        parse_graph6("A~")  # nonzero padding


def test_automorphism_counts():
    assert len(automorphisms(cycle_graph(5))) == 10
    assert len(automorphisms(path_graph(3))) == 2
    assert len(automorphisms(petersen_graph())) == 120


def test_automorphisms_k33_brute_force():
    g = complete_multipartite([3, 3])
    brute = [
        p
        for p in itertools.permutations(range(6))
        if all(g.has_edge(p[u], p[v]) == g.has_edge(u, v)
               for u in range(6) for v in range(u + 1, 6))
    ]
    assert len(brute) == 72
    assert sorted(automorphisms(g)) == sorted(brute)


def test_automorphisms_form_a_group():
    for g in (cycle_graph(6), complete_multipartite([2, 2, 1]), petersen_graph()):
        perms = set(automorphisms(g))
        assert tuple(range(g.n)) in perms
        for p in perms:
            inv = tuple(sorted(range(g.n), key=lambda i: p[i]))
            assert inv in perms
            for q in perms:
                assert tuple(p[q[i]] for i in range(g.n)) in perms
        if g.n > 8:
            break  # composing all pairs of Petersen's 120 is enough once


def test_automorphism_cap():
    with pytest.raises(CapabilityError):
        automorphisms(cycle_graph(13))


def test_canonical_form_is_isomorphism_invariant():
    rng = np.random.default_rng(3)
    for seed in range(6):
        g = random_graph(7, seed)
        perm = list(rng.permutation(7))
        h = Graph(7, [(perm[u], perm[v]) for u, v in g.edges])
        assert canonical_form(g) == canonical_form(h)


def test_small_graph_census_counts():
    assert [len(all_graphs(n)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]
    assert [len(connected_graphs(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
