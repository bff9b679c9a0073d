"""Burau and reduced Burau representations.

Products are accumulated left to right.  Right multiplication by a
generator only touches one or two columns, so ``burau`` applies each
generator as a column operation instead of a full matrix product.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .braid import Braid, LorenzSpec
from .errors import IndexOutOfRange
from .laurent import ONE, T, T_INV, ZERO, LaurentMatrix, LaurentPoly

FULL = "full"
REDUCED = "reduced"


def burau_generator(n: int, j: int, sign: int = 1) -> LaurentMatrix:
    """I_(j-1) + (1-t  t; 1  0) + I_(n-j-1), or its inverse for sign = -1."""
    if not 1 <= j <= n - 1:
        raise IndexOutOfRange(f"sigma_{j} is not a generator of B_{n}")
    rows = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    i = j - 1
    if sign > 0:
        block = [[1 - T, T], [ONE, ZERO]]
    else:
        block = [[ZERO, ONE], [T_INV, 1 - T_INV]]
    for a in range(2):
        for b in range(2):
            rows[i + a][i + b] = block[a][b]
    return LaurentMatrix.from_rows(rows)


def _reduced_column(n: int, j: int, sign: int) -> dict:
    """Non-identity column j of the reduced generator, as {row: entry}."""
    col = {}
    if sign > 0:
        if j > 1:
            col[j - 2] = T
        col[j - 1] = -T
        if j < n - 1:
            col[j] = ONE
    else:
        if j > 1:
            col[j - 2] = ONE
        col[j - 1] = -T_INV
        if j < n - 1:
            col[j] = T_INV
    return col


def reduced_burau_generator(n: int, j: int, sign: int = 1) -> LaurentMatrix:
    """(n-1)x(n-1) reduced Burau image of sigma_j^sign.

    For 1 < j < n-1 the non-trivial block is (1 t 0; 0 -t 0; 0 1 1) on
    rows/columns j-1, j, j+1; the first and last generators use the
    truncated blocks, and n = 2 gives the 1x1 matrix (-t).
    """
    if n < 2 or not 1 <= j <= n - 1:
        raise IndexOutOfRange(f"sigma_{j} is not a generator of B_{n}")
    m = n - 1
    rows = [[ONE if a == b else ZERO for b in range(m)] for a in range(m)]
    for a in range(m):
        rows[a][j - 1] = ZERO
    for a, e in _reduced_column(n, j, sign).items():
        rows[a][j - 1] = e
    return LaurentMatrix.from_rows(rows)


def _apply_full(cols: list, j: int, sign: int):
    a, b = cols[j - 1], cols[j]
    if sign > 0:
        cols[j - 1] = [(x - x.shift(1)) + y for x, y in zip(a, b)]
        cols[j] = [x.shift(1) for x in a]
    else:
        cols[j - 1] = [y.shift(-1) for y in b]
        cols[j] = [x + y - y.shift(-1) for x, y in zip(a, b)]


def _apply_reduced(cols: list, n: int, j: int, sign: int):
    col = _reduced_column(n, j, sign)
    new = [ZERO] * len(cols[0])
    for src, coef in col.items():
        new = [acc + coef * x if x else acc for acc, x in zip(new, cols[src])]
    cols[j - 1] = new


def burau(b: Braid, variant: str = FULL) -> LaurentMatrix:
    """Image of the braid word in the full or reduced Burau representation."""
    n = b.strands
    if variant == FULL:
        size = n
    elif variant == REDUCED:
        size = n - 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    # column-major working copy of the identity
    cols = [[ONE if r == c else ZERO for r in range(size)] for c in range(size)]
    for g in b.gens:
        j, sign = abs(g), (1 if g > 0 else -1)
        if variant == FULL:
            _apply_full(cols, j, sign)
        else:
            _apply_reduced(cols, n, j, sign)
    return LaurentMatrix(size, size, [cols[c][r] for r in range(size) for c in range(size)])


def _a_block(q: int, p: int, shift: int) -> list:
    """t^shift * A_(q,p), where every row of A_(q,p) is (1-t)(1, t, ..., t^(p-1))."""
    row = [(1 - T).shift(shift + k) for k in range(p)]
    return [list(row) for _ in range(q)]


def burau_lorenz(spec: LorenzSpec) -> LaurentMatrix:
    """Full Burau matrix of the Lorenz braid written down block by block.

    Rows are indexed by the top points (Q_r left points, then P_r right
    points), columns by the bottom blocks p_1, q_1, ..., p_r, q_r.  The
    left points of group i see (1-t)-rows under p-blocks 1..i, scaled by
    t^(P_(j-1)), and t^(P_i) times the identity under q-block i; each
    right point sits as an identity row under its own p-block.
    """
    n = spec.strands
    P, Q = spec.P, spec.Q
    rows = [[ZERO] * n for _ in range(n)]
    # column offsets of each p-block and q-block
    p_col, q_col = [], []
    pos = 0
    for p, q in spec.pairs:
        p_col.append(pos)
        pos += p
        q_col.append(pos)
        pos += q
    for i, (_, qi) in enumerate(spec.pairs):
        row0 = Q[i] - qi
        for j in range(i + 1):
            pj = spec.pairs[j][0]
            prev = P[j - 1] if j else 0
            block = _a_block(qi, pj, prev)
            for a in range(qi):
                for b in range(pj):
                    rows[row0 + a][p_col[j] + b] = block[a][b]
        diag = T ** P[i]
        for a in range(qi):
            rows[row0 + a][q_col[i] + a] = diag
    top = Q[-1]
    for j, (pj, _) in enumerate(spec.pairs):
        row0 = top + (P[j] - pj)
        for a in range(pj):
            rows[row0 + a][p_col[j] + a] = ONE
    return LaurentMatrix.from_rows(rows)


def permutation_matrix(spec: LorenzSpec) -> np.ndarray:
    """``burau_lorenz(spec)`` at t = 1, a 0/1 permutation matrix."""
    m = burau_lorenz(spec).evaluate(1)
    return np.array(m, dtype=np.int64)


def exact_rank(m) -> int:
    """Rank over Q by Gaussian elimination on Fractions."""
    rows = [[Fraction(int(x)) for x in r] for r in np.asarray(m).tolist()]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def eigenvalue_one_multiplicity(m) -> int:
    """n - rank(M - I); equals the cycle count for a permutation matrix."""
    m = np.asarray(m)
    return m.shape[0] - exact_rank(m - np.eye(m.shape[0], dtype=m.dtype))


def lorenz_components_by_eigenvalue(spec: LorenzSpec) -> int:
    return eigenvalue_one_multiplicity(permutation_matrix(spec))

