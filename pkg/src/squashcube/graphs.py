"""Graphs, generators, distances, the graph6 codec and small-graph tooling.

Vertices are always 0..n-1.  Johnson graph vertices are k-subsets of
{1,..,n} listed in colexicographic order; multipartite vertices are listed
class by class.
"""

from collections import deque
from itertools import combinations, permutations, product

import numpy as np

from .errors import CapabilityError, DisconnectedGraphError, Graph6ParseError

MAX_VERTICES = 4096
AUTOMORPHISM_CAP = 12
CANONICAL_CAP = 8


class Graph:
    """Undirected simple graph with vertex set {0, .., n-1}."""

    __slots__ = ("n", "adj")

    def __init__(self, n, edges=()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adj = tuple(frozenset(s) for s in adj)

    @property
    def edges(self):
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def num_edges(self):
        return sum(len(s) for s in self.adj) // 2

    def degree(self, v):
        return len(self.adj[v])

    def has_edge(self, u, v):
        return v in self.adj[u]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"


# ---------------------------------------------------------------------------
# generators

def complete_graph(n):
    return Graph(n, combinations(range(n), 2))


def path_graph(n):
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    """Cycle 0-1-..-(n-1)-0."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def johnson_subsets(n, k):
    """All k-subsets of {1..n} as sorted tuples, in colexicographic order.

    Colex compares the largest elements first, which is the order the
    addressing tables in this package use for Johnson graph vertices.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n} k={k}")
    subsets = [tuple(sorted(s)) for s in combinations(range(1, n + 1), k)]
    subsets.sort(key=lambda s: tuple(reversed(s)))
    return subsets


def johnson_graph(n, k):
    """Johnson graph J(n,k): k-subsets of {1..n}, adjacent iff they share k-1 elements."""
    subsets = johnson_subsets(n, k)
    sets = [frozenset(s) for s in subsets]
    edges = [
        (i, j)
        for i, j in combinations(range(len(sets)), 2)
        if len(sets[i] & sets[j]) == k - 1
    ]
    return Graph(len(sets), edges)


def complete_multipartite(class_sizes):
    """Complete multipartite graph; vertices listed class by class."""
    sizes = list(class_sizes)
    if len(sizes) < 2:
        raise ValueError("need at least 2 classes")
    if any(s < 1 for s in sizes):
        raise ValueError(f"empty class in {sizes}")
    classes = multipartite_classes(sizes)
    edges = []
    for a, b in combinations(range(len(sizes)), 2):
        edges.extend((u, v) for u in classes[a] for v in classes[b])
    return Graph(sum(sizes), edges)


def multipartite_classes(class_sizes):
    """Vertex ranges of each class under the class-by-class vertex order."""
    classes = []
    start = 0
    for s in class_sizes:
        classes.append(list(range(start, start + s)))
        start += s
    return classes


def kam_graph(a, m):
    """Complete m-partite graph with all classes of size a."""
    if a < 1 or m < 1:
        raise ValueError(f"need a,m >= 1, got a={a} m={m}")
    if m == 1:
        return Graph(a)
    return complete_multipartite([a] * m)


def petersen_graph():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_graph(n, seed):
    """G(n, 1/2): every pair an edge independently with probability 1/2."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rng = np.random.default_rng(seed)
    pairs = list(combinations(range(n), 2))
    coins = rng.random(len(pairs)) < 0.5
    return Graph(n, [p for p, c in zip(pairs, coins) if c])


# ---------------------------------------------------------------------------
# distances

def is_connected(g):
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.n


def bfs_distances(g):
    """All-pairs shortest path matrix (int32).  Raises on disconnected input."""
    n = g.n
    if n == 0:
        raise ValueError("empty graph has no distance matrix")
    dist = np.full((n, n), -1, dtype=np.int32)
    for src in range(n):
        row = dist[src]
        row[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = row[u] + 1
            for v in g.adj[u]:
                if row[v] < 0:
                    row[v] = du
                    queue.append(v)
        if src == 0:
            unreachable = np.flatnonzero(row < 0)
            if unreachable.size:
                raise DisconnectedGraphError(0, int(unreachable[0]))
    return dist


# ---------------------------------------------------------------------------
# graph6 codec
#
# Standard format: N(n) header, then the upper triangle of the adjacency
# matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed 6 bits
# per byte, each byte offset by 63.  Padding bits must be zero.

_G6_HEADER = b">>graph6<<"


def parse_graph6(line):
    if isinstance(line, str):
        line = line.encode("ascii")
    data = line.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    if not data:
        raise Graph6ParseError("empty graph6 line", 0)

    pos = 0
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            size_bytes, pos = data[2:8], 8
        else:
            size_bytes, pos = data[1:4], 4
        if len(data) < pos:
            raise Graph6ParseError("truncated vertex count", len(data))
        n = 0
        for i, b in enumerate(size_bytes):
            if not 63 <= b <= 126:
                raise Graph6ParseError(f"invalid byte {b}", (2 if pos == 8 else 1) + i)
            n = (n << 6) | (b - 63)
    elif 63 <= b0 <= 125:
        n = b0 - 63
        pos = 1
    else:
        raise Graph6ParseError(f"invalid header byte {b0}", 0)
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} exceeds cap {MAX_VERTICES}", 0)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise Graph6ParseError(
            f"expected {nbytes} adjacency bytes, got {len(data) - pos}", pos
        )
    bits = []
    for i in range(nbytes):
        b = data[pos + i]
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"invalid byte {b}", pos + i)
        v = b - 63
        bits.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6ParseError("nonzero padding bits", pos + nbytes - 1)

    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def emit_graph6(g):
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise ValueError("graph too large for this encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray()
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i:i + 6]:
            v = (v << 1) | b
        body.append(v + 63)
    return head + bytes(body)


# ---------------------------------------------------------------------------
# automorphisms (naive refined backtracking; fine for the small graphs we need)

def _refine_colors(g):
    colors = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        keys = [(colors[v], tuple(sorted(colors[u] for u in g.adj[v]))) for v in range(g.n)]
        relabel = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [relabel[k] for k in keys]
        if new == colors:
            break
        colors = new
    return colors


def automorphisms(g, cap=AUTOMORPHISM_CAP):
    """Full automorphism group as a list of vertex permutations (tuples).

    Brute-force backtracking over color-refined candidate maps; raises
    CapabilityError above `cap` vertices.
    """
    if g.n > cap:
        raise CapabilityError(f"automorphism search capped at {cap} vertices (n={g.n})")
    if g.n == 0:
        return [()]
    colors = _refine_colors(g)
    candidates = [
        [u for u in range(g.n) if colors[u] == colors[v]] for v in range(g.n)
    ]
    found = []
    image = [-1] * g.n
    used = [False] * g.n

    def extend(v):
        if v == g.n:
            found.append(tuple(image))
            return
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in range(v):
                if g.has_edge(v, w) != g.has_edge(u, image[w]):
                    ok = False
                    break
            if ok:
                image[v] = u
                used[u] = True
                extend(v + 1)
                used[u] = False
        image[v] = -1

    extend(0)
    return found


def orbit(perms, v):
    """Orbit of vertex v under a list of permutations."""
    return sorted({p[v] for p in perms})


def stabilizer(perms, v):
    """Permutations in the list fixing vertex v."""
    return [p for p in perms if p[v] == v]


# ---------------------------------------------------------------------------
# canonical forms and small censuses

def canonical_form(g, cap=CANONICAL_CAP):
    """Canonical label (hashable): equal exactly for isomorphic graphs.

    Vertices are grouped by iterated color refinement (an isomorphism
    invariant), then the packed upper-triangle adjacency is minimized over
    the orderings that list the color classes in canonical order.  Only
    refinement-blind graphs (regular ones, mostly) pay for the full
    factorial.
    """
    n = g.n
    if n > cap:
        raise CapabilityError(f"canonical form capped at {cap} vertices (n={g.n})")
    if n <= 1:
        return (n, 0)

    colors = _refine_colors(g)
    classes = {}
    for v in range(n):
        classes.setdefault(colors[v], []).append(v)
    class_list = [classes[c] for c in sorted(classes)]

    pair_bit = {}
    t = 0
    for j in range(1, n):
        for i in range(j):
            pair_bit[i, j] = t
            t += 1

    best = None
    for parts in product(*(permutations(cls) for cls in class_list)):
        order = [v for part in parts for v in part]   # new position -> old vertex
        packed = 0
        for (i, j), bit in pair_bit.items():
            if g.has_edge(order[i], order[j]):
                packed |= 1 << bit
        if best is None or packed < best:
            best = packed
    return (n, tuple(sorted(colors)), best)


def all_graphs(n, cap=CANONICAL_CAP):
    """All graphs on n vertices up to isomorphism, by vertex augmentation."""
    if n > cap:
        raise CapabilityError(f"graph census capped at {cap} vertices (n={n})")
    if n < 1:
        raise ValueError("need n >= 1")
    level = [Graph(1)]
    for m in range(2, n + 1):
        seen = set()
        nxt = []
        for g in level:
            base_edges = g.edges
            for mask in range(1 << (m - 1)):
                edges = list(base_edges) + [
                    (u, m - 1) for u in range(m - 1) if (mask >> u) & 1
                ]
                h = Graph(m, edges)
                key = canonical_form(h, cap=cap)
                if key not in seen:
                    seen.add(key)
                    nxt.append(h)
        level = nxt
    return level


def connected_graphs(n, cap=CANONICAL_CAP):
    """All connected graphs on n vertices up to isomorphism."""
    return [g for g in all_graphs(n, cap=cap) if is_connected(g)]
