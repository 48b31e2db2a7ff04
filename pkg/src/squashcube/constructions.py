"""Addressing constructions: multipartite blow-ups, vertex tripling, class
merging, and the one-or-two biclique cover route to partitions of dense
random graphs.

Nothing here is trusted: every constructed addressing or partition is
re-verified against BFS distances before it is returned.
"""

import math
from dataclasses import dataclass

from .addressing import (
    Addressing,
    STAR,
    distance_edge_multiset,
    partition_edge_multiset,
    verify_addressing,
)
from .errors import (
    CapabilityError,
    DisconnectedGraphError,
    EmbeddingNotFoundError,
    PreconditionError,
)
from .graphs import Graph, bfs_distances, complete_multipartite, kam_graph, multipartite_classes
from .johnson import johnson_addressing

ONE_TWO_COVER_CAP = 9


def _require_valid(adr, graph, what):
    bad = verify_addressing(bfs_distances(graph), adr)
    if bad:
        raise ValueError(f"{what} is not a valid addressing ({len(bad)} violations)")


def _checked(adr, graph, what):
    bad = verify_addressing(bfs_distances(graph), adr)
    if bad:
        raise AssertionError(f"internal error: {what} failed verification {bad[:3]}")
    return adr


def ceil_two_sqrt(k):
    """ceil(2 * sqrt(k)) without floating point."""
    return math.isqrt(4 * k - 1) + 1 if k > 0 else 0


def blow_up(base, a, m, s):
    """Addressing of K(a; m*s) from one of K(a; m), length s*len + s - 1.

    The s copies are addressed in disjoint coordinate blocks; s - 1 extra
    coordinates address the complete graph whose vertices are the copies.
    """
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    _require_valid(base, kam_graph(a, m), "blow-up base")
    if s == 1:
        return base
    copy_words = johnson_addressing(s, 1).words   # K_s rows, length s - 1
    ell = base.length
    words = []
    for c in range(s):
        prefix = STAR * (ell * c)
        suffix = STAR * (ell * (s - 1 - c))
        for w in base.words:
            words.append(prefix + w + suffix + copy_words[c])
    out = Addressing(base.r, s * ell + s - 1, words)
    return _checked(out, kam_graph(a, m * s), "blow-up result")


def plus_three(base, class_sizes, grow_class, v):
    """Grow one class by three clones of vertex v, adding three coordinates.

    v keeps its word extended by 000; the clones get 011, 101, 110; every
    other vertex gets ***.  The clones are appended at the end of the grown
    class in the class-by-class vertex order.
    """
    sizes = list(class_sizes)
    if not 0 <= grow_class < len(sizes):
        raise ValueError(f"no class {grow_class} in {sizes}")
    classes = multipartite_classes(sizes)
    if v not in classes[grow_class]:
        raise ValueError(f"vertex {v} is not in class {grow_class}")
    _require_valid(base, complete_multipartite(sizes), "plus-three base")

    insert_at = classes[grow_class][-1] + 1
    new_words = []
    for u, w in enumerate(base.words):
        new_words.append(w + ("000" if u == v else STAR * 3))
    clones = [base.words[v] + tail for tail in ("011", "101", "110")]
    new_words[insert_at:insert_at] = clones

    new_sizes = list(sizes)
    new_sizes[grow_class] += 3
    out = Addressing(base.r, base.length + 3, new_words)
    return _checked(out, complete_multipartite(new_sizes), "plus-three result")


def append_merge_column(adr, class_sizes):
    """Merge the first two classes by appending one 0/1 column.

    Turns a valid addressing of K_{a,b,c,..} into one of K_{a+b,c,..} that
    is one coordinate longer: class A gets 0, class B gets 1, the rest *.
    """
    sizes = list(class_sizes)
    if len(sizes) < 3:
        raise ValueError("need at least 3 classes to merge two of them")
    _require_valid(adr, complete_multipartite(sizes), "merge-column base")
    classes = multipartite_classes(sizes)
    column = [STAR] * adr.n
    for u in classes[0]:
        column[u] = "0"
    for u in classes[1]:
        column[u] = "1"
    words = [w + column[u] for u, w in enumerate(adr.words)]
    merged = [sizes[0] + sizes[1]] + sizes[2:]
    out = Addressing(adr.r, adr.length + 1, words)
    return _checked(out, complete_multipartite(merged), "merge-column result")


# ---------------------------------------------------------------------------
# one-or-two biclique covers of K_k

@dataclass(frozen=True)
class OneTwoCover:
    """Bicliques on {0..k-1} covering every K_k edge exactly once or twice."""

    k: int
    pieces: tuple    # of (side_a, side_b) vertex tuples


def one_two_cover(k, cap=ONE_TWO_COVER_CAP, minimum=False):
    """One-or-two cover of K_k with at most ceil(2*sqrt(k)) pieces, by exact
    backtracking; the search itself independently confirms that published
    bound at small k.

    With minimum=True the piece budget is grown from ceil(log2 k) (a valid
    lower bound for any biclique cover of a complete graph) until feasible,
    so the returned cover is smallest possible; that costs real time from
    k = 7 up.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if k > cap:
        raise CapabilityError(f"one-or-two cover search capped at {cap} (k={k})")

    pair_ids = {}
    for i in range(k):
        for j in range(i + 1, k):
            pair_ids[i, j] = len(pair_ids)
    full = (1 << len(pair_ids)) - 1

    bicliques = []
    verts = list(range(k))
    # Every assignment of vertices to side A / side B / neither, up to swap.
    for assign in _side_assignments(k):
        a = tuple(v for v in verts if assign[v] == 0)
        b = tuple(v for v in verts if assign[v] == 1)
        if not a or not b or a[0] > b[0]:
            continue
        mask = 0
        for u in a:
            for v in b:
                mask |= 1 << pair_ids[min(u, v), max(u, v)]
        bicliques.append((mask, a, b))

    by_edge = [[] for _ in pair_ids]
    for entry in sorted(bicliques, key=lambda e: -e[0].bit_count()):
        mask = entry[0]
        for e in range(len(pair_ids)):
            if (mask >> e) & 1:
                by_edge[e].append(entry)

    max_piece = (k // 2) * ((k + 1) // 2)

    def extend(once, twice, chosen, budget):
        if once == full:
            return list(chosen)
        missing = (~once & full).bit_count()
        if budget == 0 or missing > budget * max_piece:
            return None
        e = ((~once & full) & -(~once & full)).bit_length() - 1
        for mask, a, b in by_edge[e]:
            if mask & twice:
                continue
            chosen.append((a, b))
            got = extend(once | mask, twice | (once & mask), chosen, budget - 1)
            if got is not None:
                return got
            chosen.pop()
        return None

    cap_budget = ceil_two_sqrt(k)
    start = max(1, math.ceil(math.log2(k))) if minimum else cap_budget
    for budget in range(start, cap_budget + 1):
        found = extend(0, 0, [], budget)
        if found is not None:
            cover = OneTwoCover(k, tuple(found))
            _check_cover(cover)
            return cover
    raise AssertionError(f"no one-or-two cover of K_{k} within ceil(2*sqrt(k)) pieces")


def _side_assignments(k):
    if k == 0:
        yield ()
        return
    for rest in _side_assignments(k - 1):
        for side in (0, 1, 2):
            yield rest + (side,)


def _check_cover(cover):
    counts = {}
    for a, b in cover.pieces:
        if set(a) & set(b):
            raise AssertionError("piece sides overlap")
        for u in a:
            for v in b:
                key = (min(u, v), max(u, v))
                counts[key] = counts.get(key, 0) + 1
    k = cover.k
    for i in range(k):
        for j in range(i + 1, k):
            if counts.get((i, j), 0) not in (1, 2):
                raise AssertionError(f"edge ({i},{j}) covered {counts.get((i, j), 0)} times")


def cover_to_H(cover):
    """The graph on {0..k-1} whose edges are the once-covered pairs."""
    counts = {}
    for a, b in cover.pieces:
        for u in a:
            for v in b:
                key = (min(u, v), max(u, v))
                counts[key] = counts.get(key, 0) + 1
    return Graph(cover.k, [e for e, c in counts.items() if c == 1])


# ---------------------------------------------------------------------------
# the random-graph partition

def induced_embedding(host, pattern):
    """An induced copy of `pattern` in `host` (vertex map), or None.

    Plain backtracking in pattern-vertex order with degree pruning; complete,
    so None is a proof that no induced copy exists.
    """
    hn, pn = host.n, pattern.n
    if pn > hn:
        return None
    pdeg = [pattern.degree(v) for v in range(pn)]
    image = []

    def extend(v):
        if v == pn:
            return True
        for cand in range(hn):
            if cand in image or host.degree(cand) < pdeg[v]:
                continue
            if all(
                host.has_edge(cand, image[u]) == pattern.has_edge(v, u)
                for u in range(v)
            ):
                image.append(cand)
                if extend(v + 1):
                    return True
                image.pop()
        return False

    return list(image) if extend(0) else None


def k_threshold(n):
    """Largest k with C(n,k) >= 4 k^4 2^(k(k-1)/2), by exact integer arithmetic.

    Falls back to the degenerate k = 1 when no k >= 2 qualifies (tiny n).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    best = 1
    for k in range(2, n + 1):
        if math.comb(n, k) >= 4 * k ** 4 * (1 << (k * (k - 1) // 2)):
            best = k
    return best


def random_partition(g, k, cover=None):
    """Partition of the distance multigraph of a diameter-2 graph into at
    most n - k + ceil(2*sqrt(k)) + 1 multipartite pieces.

    The k-vertex once-covered graph H of a one-or-two cover of K_k is
    located as an induced subgraph (its image is W); the cover pieces are
    mapped onto W, one biclique separates W from the rest, and one star per
    outside vertex finishes the job.  The result is verified to hit the
    distance multiset exactly before being returned.
    """
    n = g.n
    try:
        dist = bfs_distances(g)
    except DisconnectedGraphError as exc:
        raise PreconditionError(str(exc)) from exc
    if dist.max() != 2:
        raise PreconditionError(f"graph diameter is {int(dist.max())}, need exactly 2")
    for u in range(n):
        for v in range(u + 1, n):
            if not (g.adj[u] & g.adj[v]):
                raise PreconditionError(f"vertices {u},{v} have no common neighbor")

    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if cover is None:
        # k = 1 is the degenerate single-vertex W: K_1 has nothing to cover
        cover = one_two_cover(k) if k >= 2 else OneTwoCover(1, ())
    elif cover.k != k:
        raise ValueError(f"cover is for k={cover.k}, not {k}")
    h = cover_to_H(cover)
    phi = induced_embedding(g, h)
    if phi is None:
        raise EmbeddingNotFoundError(
            f"no induced copy of the {k}-vertex cover graph in this graph"
        )

    w_set = set(phi)
    outside = [z for z in range(n) if z not in w_set]
    pieces = [
        [sorted(phi[u] for u in a), sorted(phi[v] for v in b)]
        for a, b in cover.pieces
    ]
    if outside:
        pieces.append([sorted(w_set), sorted(outside)])
    for z in outside:
        leaves = [w for w in w_set if w not in g.adj[z]]
        leaves += [y for y in outside if y != z and y not in g.adj[z]]
        leaves += [y for y in outside if y < z and y in g.adj[z]]
        if leaves:
            pieces.append([[z], sorted(leaves)])

    if partition_edge_multiset(pieces) != distance_edge_multiset(dist):
        raise AssertionError(
            "partition failed verification although all preconditions held; "
            "please report this graph"
        )
    assert len(pieces) <= n - k + ceil_two_sqrt(k) + 1
    return pieces
