"""Integer simplicial homology of finite flag complexes.

Boundary matrices are assembled over canonically sorted simplex bases
with the orientation fixed by sorted-vertex order: the face omitting the
vertex in position j enters with sign (-1)^j.  Ranks and torsion come
from an exact Smith normal form over unbounded Python integers; a
modular rank routine is provided purely as a cross-check and is never
used as the answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .flagcomplex import FlagComplex, cliques_of_size


@dataclass(frozen=True)
class ChainBoundary:
    """The boundary map from k-chains to (k-1)-chains.

    rows index the (k-1)-simplex basis, cols the k-simplex basis, both
    in canonical order; entries are in {-1, 0, +1}.
    """

    dim: int
    rows: tuple[tuple[str, ...], ...]
    cols: tuple[tuple[str, ...], ...]
    matrix: np.ndarray


def simplex_basis(c: FlagComplex, k: int) -> list[tuple[str, ...]]:
    """The canonical basis of k-chains: sorted-vertex k-simplices in
    lexicographic order."""
    if k < 0:
        raise ValueError("negative dimension")
    return cliques_of_size(c, k + 1)


def boundary_matrix(c: FlagComplex, k: int) -> ChainBoundary:
    """The single boundary map in dimension k >= 1."""
    if k < 1:
        raise ValueError("boundary matrices start at dimension 1")
    rows = simplex_basis(c, k - 1)
    cols = simplex_basis(c, k)
    row_index = {s: i for i, s in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, simplex in enumerate(cols):
        for omit in range(len(simplex)):
            face = simplex[:omit] + simplex[omit + 1:]
            m[row_index[face], j] = (-1) ** omit
    return ChainBoundary(k, tuple(rows), tuple(cols), m)


def boundary_matrices(c: FlagComplex, max_dim: int) -> list[ChainBoundary]:
    """Boundary maps for dimensions 1..max_dim."""
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    return [boundary_matrix(c, k) for k in range(1, max_dim + 1)]


@dataclass(frozen=True)
class SNFResult:
    rank: int
    factors: tuple[int, ...]


def smith_normal_form(matrix) -> SNFResult:
    """Exact Smith normal form over the integers.

    Returns the rank and the invariant factors (positive, each dividing
    the next).  Accepts any nested sequence or integer ndarray; all
    arithmetic is unbounded-precision.
    """
    a = [[int(x) for x in row] for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    diag: list[int] = []
    t = 0
    while t < min(n_rows, n_cols):
        # locate a pivot of smallest absolute value
        pivot = None
        best = None
        for i in range(t, n_rows):
            row = a[i]
            for j in range(t, n_cols):
                x = row[j]
                if x and (best is None or abs(x) < best):
                    best = abs(x)
                    pivot = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]

        while True:
            # clear the pivot column
            for i in range(t + 1, n_rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
            # clear the pivot row
            dirty = False
            for j in range(t + 1, n_cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            if any(a[i][t] for i in range(t + 1, n_rows)):
                continue
            # pivot must divide the remaining submatrix
            offender = None
            p = a[t][t]
            for i in range(t + 1, n_rows):
                row = a[i]
                for j in range(t + 1, n_cols):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        diag.append(abs(a[t][t]))
        t += 1
    return SNFResult(len(diag), tuple(diag))


def rank_mod_p(matrix, p: int) -> int:
    """Rank over the field with p elements, by Gaussian elimination.
    Cross-check only; exact answers come from the Smith normal form."""
    a = [[int(x) % p for x in row] for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    rank = 0
    col = 0
    for col in range(n_cols):
        pivot_row = None
        for i in range(rank, n_rows):
            if a[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        inv = pow(a[rank][col], p - 2, p)
        a[rank] = [(x * inv) % p for x in a[rank]]
        for i in range(n_rows):
            if i != rank and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == n_rows:
            break
    return rank


@dataclass(frozen=True)
class HomologyReport:
    """Betti numbers, boundary ranks, torsion, and the Euler cross-check
    for dimensions 0..max_dim."""

    max_dim: int
    simplex_counts: tuple[int, ...]
    boundary_ranks: tuple[int, ...]       # rank of d_k for k = 0..max_dim+1 (d_0 = 0)
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]  # nontrivial invariant factors of d_{k+1}
    euler_from_f: int
    betti_alternating_sum: int


def betti_numbers(c: FlagComplex, max_dim: int) -> HomologyReport:
    """Integer homology in dimensions 0..max_dim.

    b_k = (#k-simplices) - rank d_k - rank d_{k+1}; torsion in H_k is
    read off the invariant factors of d_{k+1}.
    """
    if max_dim < 0:
        raise ValueError("max_dim must be >= 0")
    counts = [len(simplex_basis(c, k)) for k in range(max_dim + 1)]
    snf: dict[int, SNFResult] = {}
    ranks = [0]  # rank of d_0
    for k in range(1, max_dim + 2):
        snf[k] = smith_normal_form(boundary_matrix(c, k).matrix)
        ranks.append(snf[k].rank)
    betti = []
    torsion = []
    for k in range(max_dim + 1):
        betti.append(counts[k] - ranks[k] - ranks[k + 1])
        torsion.append(tuple(f for f in snf[k + 1].factors if f not in (0, 1)))
    euler_from_f = sum((-1) ** k * f for k, f in enumerate(counts))
    alt = sum((-1) ** k * b for k, b in enumerate(betti))
    return HomologyReport(max_dim, tuple(counts), tuple(ranks), tuple(betti),
                          tuple(torsion), euler_from_f, alt)


def report_as_dict(r: HomologyReport) -> dict:
    """JSON-ready form of a homology report."""
    return {
        "max_dim": r.max_dim,
        "simplex_counts": list(r.simplex_counts),
        "boundary_ranks": list(r.boundary_ranks),
        "betti": list(r.betti),
        "torsion": [list(t) for t in r.torsion],
        "euler_from_f": r.euler_from_f,
        "betti_alternating_sum": r.betti_alternating_sum,
    }
