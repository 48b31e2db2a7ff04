import numpy as np
import pytest

from squashcube.addressing import Addressing
from squashcube.graphs import (
    bfs_distances,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    is_connected,
    kam_graph,
    path_graph,
    petersen_graph,
    random_graph,
)
from squashcube.spectral import Inertia, inertia, is_eigensharp, lower_bound
from oracles import sturm_inertia


def test_inertia_complete_graphs():
    for n in range(2, 8):
        assert inertia(bfs_distances(complete_graph(n))) == Inertia(1, 0, n - 1)


def test_inertia_k_a11():
    for a in range(1, 21):
        ine = inertia(bfs_distances(complete_multipartite([a, 1, 1])))
        assert ine.n_minus == a + 1


def test_inertia_zero_matrix():
    assert inertia(np.zeros((3, 3), dtype=int)) == Inertia(0, 3, 0)


def test_inertia_rejects_asymmetric():
    with pytest.raises(ValueError):
        inertia([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        inertia([[0, 1, 2], [1, 0, 1]])


def test_inertia_matches_sturm_oracle_exhaustively_to_n6():
    from squashcube.graphs import connected_graphs

    for n in range(2, 7):
        for g in connected_graphs(n):
            d = bfs_distances(g)
            ine = inertia(d)
            assert sturm_inertia(d) == (ine.n_plus, ine.n_zero, ine.n_minus)


def test_inertia_matches_sturm_oracle_sampled_n7():
    checked = 0
    for seed in range(80):
        g = random_graph(7, seed)
        if not is_connected(g):
            continue
        d = bfs_distances(g)
        ine = inertia(d)
        assert sturm_inertia(d) == (ine.n_plus, ine.n_zero, ine.n_minus)
        checked += 1
    assert checked > 40


def test_inertia_congruence_invariance():
    rng = np.random.default_rng(11)
    for seed in range(10):
        g = random_graph(7, seed)
        if not is_connected(g):
            continue
        d = np.array(bfs_distances(g), dtype=object)
        p = np.eye(7, dtype=object)
        for _ in range(10):
            i, j = rng.integers(0, 7, 2)
            if i != j:
                p[i] += p[j] * int(rng.integers(-2, 3))
        assert inertia(p.T @ d @ p) == inertia(d)


def test_lower_bound_petersen():
    rep = lower_bound(bfs_distances(petersen_graph()), 2)
    assert rep.inertia == Inertia(1, 4, 5)
    assert rep.eigen_bound_r2 == 5 and rep.log2_bound == 4 and rep.best == 5
    rep3 = lower_bound(bfs_distances(petersen_graph()), 3)
    assert rep3.eigen_bound_r == 3 and rep3.best == 3


def test_lower_bound_multipartite():
    assert lower_bound(bfs_distances(kam_graph(3, 3)), 2).best >= 6
    assert lower_bound(bfs_distances(kam_graph(5, 5)), 2).best >= 20
    assert lower_bound(bfs_distances(complete_graph(2)), 2).best == 1


def test_lower_bound_log2_applies_only_for_r2():
    d = bfs_distances(complete_graph(5))
    r2 = lower_bound(d, 2)
    assert r2.log2_bound == 3
    assert r2.best == max(r2.eigen_bound_r, r2.log2_bound)
    r4 = lower_bound(d, 4)
    assert r4.best == r4.eigen_bound_r == max(1, -(-4 // 3))


def test_lower_bound_rejects_bad_r():
    with pytest.raises(ValueError):
        lower_bound(bfs_distances(complete_graph(3)), 1)


def test_eigensharp_path():
    d = bfs_distances(path_graph(4))
    adr = Addressing(2, 3, ["000", "100", "110", "111"])
    assert is_eigensharp(d, adr)


def test_eigensharp_even_cycle():
    from squashcube.search import SearchConfig, solve_N

    res = solve_N(SearchConfig(graph=cycle_graph(6), r=2))
    assert res.value == 3
    assert is_eigensharp(bfs_distances(cycle_graph(6)), res.addressing)


def test_petersen_not_eigensharp():
    from squashcube.search import SearchConfig, solve_N

    res = solve_N(SearchConfig(graph=petersen_graph(), r=2))
    assert res.value == 6
    assert not is_eigensharp(bfs_distances(petersen_graph()), res.addressing)


def test_eigensharp_single_vertex_vacuous():
    assert is_eigensharp(np.zeros((1, 1), dtype=int), Addressing(2, 0, [""]))


def test_eigensharp_rejects_invalid_addressing():
    d = bfs_distances(path_graph(3))
    with pytest.raises(ValueError):
        is_eigensharp(d, Addressing(2, 2, ["00", "00", "11"]))
    with pytest.raises(ValueError):
        is_eigensharp(d, Addressing(3, 2, ["00", "01", "02"]))


def test_valid_addressings_respect_eigen_bound():
    # length >= max(n+, n-) for every r = 2 addressing we can build
    from squashcube.graphs import johnson_graph
    from squashcube.johnson import johnson_addressing

    for n, k in ((4, 1), (5, 2), (6, 3)):
        ine = inertia(bfs_distances(johnson_graph(n, k)))
        assert johnson_addressing(n, k).length >= max(ine.n_plus, ine.n_minus)
