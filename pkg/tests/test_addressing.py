import json
import random

import pytest

from squashcube.addressing import (
    Addressing,
    addressing_from_json,
    addressing_to_json,
    distance_edge_multiset,
    format_addressing,
    pack_word,
    packed_distance,
    parse_addressing,
    partition_edge_multiset,
    partition_to_addressing,
    to_partition,
    unpack_word,
    verify_addressing,
    weight,
    word_distance,
)
from squashcube.graphs import Graph, bfs_distances, complete_graph, johnson_graph
from squashcube.johnson import johnson_addressing


def test_word_distance_paper_rows():
    # J(5,2): {2,3} vs {3,4} are adjacent
    assert word_distance("1*0000", "*11*00") == 1
    # J(4,1): {1} vs {4}
    assert word_distance("000", "**1") == 1
    assert word_distance("0*1", "0*1") == 0


def test_word_distance_errors_and_symmetry():
    with pytest.raises(ValueError):
        word_distance("00", "000")
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 12)
        a = "".join(rng.choice("012*") for _ in range(n))
        b = "".join(rng.choice("012*") for _ in range(n))
        assert word_distance(a, b) == word_distance(b, a)
        assert word_distance(a, b) <= min(weight(a), weight(b))


def test_weight():
    assert weight("***") == 0
    assert weight("1*0000") == 5
    assert weight("0*0*01") == 4


@pytest.mark.parametrize("r", [2, 3, 4, 6, 10])
def test_packed_distance_agrees_with_symbol_count(r):
    rng = random.Random(r)
    alphabet = "*" + "".join(str(d) for d in range(r))
    planes = 2 if r <= 4 else r
    for _ in range(300):
        n = rng.randint(1, 15)
        a = "".join(rng.choice(alphabet) for _ in range(n))
        b = "".join(rng.choice(alphabet) for _ in range(n))
        pa, pb = pack_word(a, r), pack_word(b, r)
        assert packed_distance(pa, pb, n, planes) == word_distance(a, b)
        assert unpack_word(pa, n, r) == a


def test_addressing_validation():
    with pytest.raises(ValueError):
        Addressing(2, 3, ["00*", "021"])        # symbol 2 needs r >= 3
    with pytest.raises(ValueError):
        Addressing(3, 3, ["00", "000"])         # length mismatch
    with pytest.raises(ValueError):
        Addressing(1, 2, ["00"])
    with pytest.raises(ValueError):
        Addressing(11, 2, ["00"])


def test_verify_addressing_flags_a_flipped_symbol():
    adr = johnson_addressing(5, 2)
    d = bfs_distances(johnson_graph(5, 2))
    assert verify_addressing(d, adr) == []
    for v, word in enumerate(adr.words):
        for j, ch in enumerate(word):
            if ch == "0":
                broken = list(adr.words)
                broken[v] = word[:j] + "1" + word[j + 1:]
                assert verify_addressing(d, Addressing(2, 6, broken))
                return


def test_verify_addressing_size_mismatch():
    with pytest.raises(ValueError):
        verify_addressing(bfs_distances(complete_graph(3)), Addressing(2, 1, ["0", "1"]))


def test_to_partition_k3():
    adr = Addressing(2, 2, ["00", "01", "1*"])
    d = bfs_distances(complete_graph(3))
    assert verify_addressing(d, adr) == []
    parts = to_partition(adr)
    assert len(parts) == 2
    assert partition_edge_multiset(parts) == distance_edge_multiset(d)


def test_to_partition_drops_all_star_column():
    adr = Addressing(2, 3, ["0*0", "1*1", "0**"])
    parts = to_partition(adr)
    assert len(parts) == 2


def test_to_partition_johnson41_covers_k4():
    adr = johnson_addressing(4, 1)
    parts = to_partition(adr)
    assert len(parts) == 3
    d = bfs_distances(complete_graph(4))
    assert partition_edge_multiset(parts) == distance_edge_multiset(d)


def test_partition_validity_iff_multiset_match():
    # cross-check on a valid and an invalid addressing of the same graph
    g = johnson_graph(4, 2)
    d = bfs_distances(g)
    good = johnson_addressing(4, 2)
    assert partition_edge_multiset(to_partition(good)) == distance_edge_multiset(d)
    bad = Addressing(2, good.length, [w.replace("1", "0", 1) for w in good.words])
    assert (partition_edge_multiset(to_partition(bad)) == distance_edge_multiset(d)) == (
        verify_addressing(d, bad) == []
    )


def test_tree_cut_partition_gives_length_n_minus_1():
    # one biclique per tree edge: the two sides of the cut
    n = 6
    tree_edges = [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]
    parts = []
    for cut in tree_edges:
        side = {cut[1]}
        stack = [cut[1]]
        while stack:
            x = stack.pop()
            for a, b in tree_edges:
                if {a, b} == set(cut):
                    continue
                for p, q in ((a, b), (b, a)):
                    if p == x and q not in side:
                        side.add(q)
                        stack.append(q)
        parts.append([sorted(side), sorted(set(range(n)) - side)])
    adr = partition_to_addressing(parts, n, 2)
    assert adr.length == n - 1
    assert verify_addressing(bfs_distances(Graph(n, tree_edges)), adr) == []


def test_partition_to_addressing_edge_cases():
    assert partition_to_addressing([], 1, 2).length == 0
    with pytest.raises(ValueError):
        partition_to_addressing([[[0], [1], [2]]], 3, 2)   # 3 classes, r = 2
    with pytest.raises(ValueError):
        partition_to_addressing([[[0], [0]]], 2, 2)        # overlap
    with pytest.raises(ValueError):
        partition_to_addressing([[[0], []]], 2, 2)         # empty class


def test_partition_round_trip_preserves_word_multiset():
    adr = johnson_addressing(5, 2)
    back = partition_to_addressing(to_partition(adr), adr.n, adr.r)
    assert sorted(back.words) == sorted(adr.words)
    assert verify_addressing(bfs_distances(johnson_graph(5, 2)), back) == []


def test_address_space_group_preserves_distances():
    # coordinate permutations and per-coordinate symbol permutations
    rng = random.Random(7)
    for r in (2, 3):
        alphabet = [str(d) for d in range(r)]
        for _ in range(50):
            n, length = rng.randint(2, 6), rng.randint(1, 8)
            words = [
                "".join(rng.choice(alphabet + ["*"]) for _ in range(length))
                for _ in range(n)
            ]
            cols = list(range(length))
            rng.shuffle(cols)
            perms = []
            for _ in range(length):
                p = alphabet[:]
                rng.shuffle(p)
                perms.append(dict(zip(alphabet, p)))
            transformed = [
                "".join(
                    "*" if w[c] == "*" else perms[c][w[c]]
                    for c in cols
                )
                for w in words
            ]
            for a in range(n):
                for b in range(n):
                    assert word_distance(words[a], words[b]) == word_distance(
                        transformed[a], transformed[b]
                    )


def test_text_format_round_trip():
    adr = johnson_addressing(5, 2)
    text = format_addressing(adr)
    assert text.splitlines()[0] == "r=2 len=6 n=10"
    assert parse_addressing(text) == adr


def test_text_format_errors():
    with pytest.raises(ValueError):
        parse_addressing("")
    with pytest.raises(ValueError):
        parse_addressing("r=2 len=2 n=2\n0\t00\n")          # missing word
    with pytest.raises(ValueError):
        parse_addressing("r=2 len=2 n=1\n0\t00\n0\t01\n")   # repeated vertex


def test_json_mirror():
    adr = johnson_addressing(4, 2)
    blob = addressing_to_json(adr)
    assert json.loads(blob)["len"] == 4
    assert addressing_from_json(blob) == adr
