"""Address words over {0..r-1, *}, addressings, verification and partitions.

A word is a plain string of digit characters and '*'.  The distance between
two words is the number of positions where both symbols are digits and they
differ; an addressing of a graph is valid when this matches the graph
distance for every vertex pair.

Internally words are packed into single integers (a care bitmask plus two
digit bitplanes) so a pairwise distance costs a handful of bitwise ops and a
popcount.  Alphabets up to r = 4 use the two bitplanes; 5 <= r <= 10 falls
back to one bitplane per digit value.
"""

import json
from collections import Counter

STAR = "*"
MAX_ALPHABET = 10


def _check_word(word, r):
    for ch in word:
        if ch == STAR:
            continue
        if not ch.isdigit() or int(ch) >= r:
            raise ValueError(f"symbol {ch!r} invalid for alphabet size {r}")


def pack_word(word, r):
    """Pack a word into one int: care mask, then one or more digit bitplanes."""
    length = len(word)
    care = 0
    if r <= 4:
        planes = [0, 0]
        for i, ch in enumerate(word):
            if ch == STAR:
                continue
            care |= 1 << i
            d = ord(ch) - 48
            if d & 1:
                planes[0] |= 1 << i
            if d & 2:
                planes[1] |= 1 << i
    else:
        planes = [0] * r
        for i, ch in enumerate(word):
            if ch == STAR:
                continue
            care |= 1 << i
            planes[ord(ch) - 48] |= 1 << i
    packed = care
    for p, plane in enumerate(planes):
        packed |= plane << ((p + 1) * length)
    return packed


def packed_distance(a, b, length, nplanes):
    """Distance between two packed words of the same length and plane count."""
    mask = (1 << length) - 1
    diff = a ^ b
    acc = 0
    for p in range(1, nplanes + 1):
        acc |= diff >> (p * length)
    return (a & b & acc & mask).bit_count()


def unpack_word(packed, length, r):
    """Inverse of pack_word."""
    chars = []
    for i in range(length):
        if not (packed >> i) & 1:
            chars.append(STAR)
        elif r <= 4:
            d = ((packed >> (length + i)) & 1) | (((packed >> (2 * length + i)) & 1) << 1)
            chars.append(chr(48 + d))
        else:
            d = next(
                p for p in range(r) if (packed >> ((p + 1) * length + i)) & 1
            )
            chars.append(chr(48 + d))
    return "".join(chars)


def _nplanes(r):
    return 2 if r <= 4 else r


def word_distance(a, b):
    """Number of positions where both symbols are digits and differ."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return sum(
        1
        for x, y in zip(a, b)
        if x != STAR and y != STAR and x != y
    )


def weight(word):
    """Number of non-* symbols."""
    return len(word) - word.count(STAR)


class Addressing:
    """An assignment of equal-length words over {0..r-1, *} to vertices 0..n-1."""

    __slots__ = ("r", "length", "words", "_packed")

    def __init__(self, r, length, words):
        if not 2 <= r <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in [2, {MAX_ALPHABET}], got {r}")
        words = tuple(words)
        for w in words:
            if len(w) != length:
                raise ValueError(f"word {w!r} does not have length {length}")
            _check_word(w, r)
        self.r = r
        self.length = length
        self.words = words
        self._packed = None

    @property
    def n(self):
        return len(self.words)

    def packed(self):
        if self._packed is None:
            self._packed = [pack_word(w, self.r) for w in self.words]
        return self._packed

    def distance(self, u, v):
        return packed_distance(
            self.packed()[u], self.packed()[v], self.length, _nplanes(self.r)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Addressing)
            and (self.r, self.length, self.words) == (other.r, other.length, other.words)
        )

    def __hash__(self):
        return hash((self.r, self.length, self.words))

    def __repr__(self):
        return f"Addressing(r={self.r}, length={self.length}, n={self.n})"


def verify_addressing(dist, adr):
    """All violating pairs (u, v, expected, got); empty list means valid."""
    n = len(dist)
    if adr.n != n:
        raise ValueError(f"addressing covers {adr.n} vertices, matrix has {n}")
    packed = adr.packed()
    length, planes = adr.length, _nplanes(adr.r)
    violations = []
    for u in range(n):
        pu = packed[u]
        row = dist[u]
        for v in range(u + 1, n):
            got = packed_distance(pu, packed[v], length, planes)
            if got != row[v]:
                violations.append((u, v, int(row[v]), got))
    return violations


def is_valid_addressing(dist, adr):
    return not verify_addressing(dist, adr)


# ---------------------------------------------------------------------------
# the partition view
#
# A partition is a list of pieces; a piece is a list of >= 2 pairwise
# disjoint nonempty vertex classes (each a sorted list).  Its edges are all
# pairs crossing two classes, and a valid addressing's pieces partition the
# distance multigraph's edge multiset, one piece per useful coordinate.

def to_partition(adr):
    """One multipartite piece per coordinate; coordinates with < 2 classes are dropped."""
    pieces = []
    for j in range(adr.length):
        classes = {}
        for v, w in enumerate(adr.words):
            if w[j] != STAR:
                classes.setdefault(w[j], []).append(v)
        if len(classes) >= 2:
            pieces.append([classes[c] for c in sorted(classes)])
    return pieces


def partition_to_addressing(parts, n, r):
    """Inverse of to_partition: one coordinate per piece."""
    columns = []
    for piece in parts:
        if len(piece) > r:
            raise ValueError(
                f"piece has {len(piece)} classes, alphabet only allows {r}"
            )
        col = [STAR] * n
        seen = set()
        for c, cls in enumerate(piece):
            if not cls:
                raise ValueError("empty class in piece")
            for v in cls:
                if v in seen:
                    raise ValueError(f"vertex {v} in two classes of one piece")
                seen.add(v)
                col[v] = str(c)
        columns.append(col)
    words = ["".join(col[v] for col in columns) for v in range(n)]
    return Addressing(r, len(parts), words)


def partition_edge_multiset(parts):
    """Edge multiset of a partition, keyed by (u, v) with u < v."""
    count = Counter()
    for piece in parts:
        for i in range(len(piece)):
            for j in range(i + 1, len(piece)):
                for u in piece[i]:
                    for v in piece[j]:
                        count[min(u, v), max(u, v)] += 1
    return count


def distance_edge_multiset(dist):
    """Edge multiset of the distance multigraph of a distance matrix."""
    n = len(dist)
    return Counter(
        {
            (u, v): int(dist[u][v])
            for u in range(n)
            for v in range(u + 1, n)
            if dist[u][v]
        }
    )


# ---------------------------------------------------------------------------
# text and JSON formats
#
# Text: header "r=<r> len=<l> n=<n>", then one "<vertex>\t<word>" line per
# vertex.  The JSON mirror carries the same fields.

def format_addressing(adr):
    lines = [f"r={adr.r} len={adr.length} n={adr.n}"]
    lines.extend(f"{v}\t{w}" for v, w in enumerate(adr.words))
    return "\n".join(lines) + "\n"


def parse_addressing(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty addressing file")
    try:
        header = dict(item.split("=", 1) for item in lines[0].split())
        r, length, n = int(header["r"]), int(header["len"]), int(header["n"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad header line {lines[0]!r}: {exc}") from exc
    if len(lines) - 1 != n:
        raise ValueError(f"header says n={n} but file has {len(lines) - 1} words")
    words = [None] * n
    for ln in lines[1:]:
        vid, word = ln.split("\t")
        v = int(vid)
        if not 0 <= v < n or words[v] is not None:
            raise ValueError(f"bad or repeated vertex id {vid}")
        words[v] = word
    return Addressing(r, length, words)


def addressing_to_json(adr):
    return json.dumps(
        {"r": adr.r, "len": adr.length, "n": adr.n, "words": list(adr.words)}
    )


def addressing_from_json(text):
    obj = json.loads(text)
    return Addressing(obj["r"], obj["len"], obj["words"])


def save_addressing(path, adr):
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_addressing(adr))


def load_addressing(path):
    with open(path, encoding="ascii") as fh:
        return parse_addressing(fh.read())
