"""Exact inertia of symmetric integer matrices and the addressing lower bounds.

Inertia is computed by symmetric congruence elimination over rationals:
1x1 pivots on nonzero diagonal entries, and a 2x2 block pivot [0 d; d 0]
(contributing one positive and one negative eigenvalue) when the remaining
diagonal is all zero.  Congruence preserves inertia, so counting pivot signs
is exact -- no floating point, no eigenvalues.  Distance matrices have zero
diagonal, so the 2x2 pivot is the first move, not a fallback.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .addressing import verify_addressing


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def dimension(self):
        return self.n_plus + self.n_zero + self.n_minus


def _as_fraction_rows(matrix):
    rows = [[Fraction(int(x)) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("matrix is not square")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValueError(f"matrix not symmetric at ({i},{j})")
    return rows


def inertia(matrix):
    """Exact (n_plus, n_zero, n_minus) of a symmetric integer matrix."""
    m = _as_fraction_rows(matrix)
    active = list(range(len(m)))
    n_plus = n_zero = n_minus = 0

    while active:
        pivot = next((i for i in active if m[i][i] != 0), None)
        if pivot is not None:
            d = m[pivot][pivot]
            if d > 0:
                n_plus += 1
            else:
                n_minus += 1
            active.remove(pivot)
            for i in active:
                f = m[i][pivot] / d
                if f:
                    for j in active:
                        m[i][j] -= f * m[pivot][j]
            continue

        block = next(
            (
                (i, j)
                for ai, i in enumerate(active)
                for j in active[ai + 1:]
                if m[i][j] != 0
            ),
            None,
        )
        if block is None:
            n_zero += len(active)
            break
        p, q = block
        d = m[p][q]
        n_plus += 1
        n_minus += 1
        active.remove(p)
        active.remove(q)
        for i in active:
            fp = m[i][p] / d
            fq = m[i][q] / d
            if fp or fq:
                for j in active:
                    m[i][j] -= fp * m[q][j] + fq * m[p][j]

    return Inertia(n_plus, n_zero, n_minus)


@dataclass(frozen=True)
class BoundReport:
    """Lower bounds on the addressing length of one distance matrix."""

    n: int
    r: int
    inertia: Inertia
    eigen_bound_r2: int     # max(n+, n-), the r = 2 eigenvalue bound
    eigen_bound_r: int      # max(n+, ceil(n- / (r-1)))
    log2_bound: int         # ceil(log2 n); binding for r = 2 only
    best: int


def lower_bound(dist, r=2):
    """Best known lower bound on N_r for the graph behind this distance matrix."""
    if r < 2:
        raise ValueError(f"alphabet size must be >= 2, got {r}")
    ine = inertia(dist)
    n = ine.dimension
    eigen_r2 = max(ine.n_plus, ine.n_minus)
    eigen_r = max(ine.n_plus, -(-ine.n_minus // (r - 1)))
    log2_bound = math.ceil(math.log2(n)) if n > 1 else 0
    best = max(eigen_r, log2_bound) if r == 2 else eigen_r
    return BoundReport(n, r, ine, eigen_r2, eigen_r, log2_bound, best)


def is_eigensharp(dist, adr):
    """True when a valid r=2 addressing meets the eigenvalue bound exactly."""
    if adr.r != 2:
        raise ValueError("eigensharpness is defined for the 2-symbol alphabet")
    violations = verify_addressing(dist, adr)
    if violations:
        raise ValueError(f"addressing is not valid ({len(violations)} violations)")
    ine = inertia(dist)
    return adr.length == max(ine.n_plus, ine.n_minus)
