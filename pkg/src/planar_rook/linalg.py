"""Exact rational matrix helpers.

Matrices are numpy arrays of ``dtype=object`` holding ``Fraction`` (or int)
entries, so ``@``, ``+`` and ``==`` stay exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np


def zeros(rows: int, cols: int | None = None) -> np.ndarray:
    cols = rows if cols is None else cols
    m = np.empty((rows, cols), dtype=object)
    m.fill(Fraction(0))
    return m


def eye(size: int) -> np.ndarray:
    m = zeros(size)
    for i in range(size):
        m[i, i] = Fraction(1)
    return m


def as_exact(m) -> np.ndarray:
    """Copy ``m`` into an object array of ``Fraction``."""
    a = np.asarray(m, dtype=object)
    out = np.empty(a.shape, dtype=object)
    for idx, v in np.ndenumerate(a):
        out[idx] = Fraction(v)
    return out


def row_echelon(rows: Iterable[Sequence]) -> list[list[Fraction]]:
    """Reduced row echelon form over the rationals, zero rows dropped.

    Pivots are the first nonzero entry found scanning down each column.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    piv_r = 0
    for c in range(ncols):
        for r in range(piv_r, len(m)):
            if m[r][c] != 0:
                break
        else:
            continue
        m[piv_r], m[r] = m[r], m[piv_r]
        pivot_row = m[piv_r]
        p = pivot_row[c]
        if p != 1:
            pivot_row[c:] = [x / p for x in pivot_row[c:]]
        for r2 in range(len(m)):
            if r2 != piv_r:
                f = m[r2][c]
                if f:
                    row = m[r2]
                    for j in range(c, ncols):
                        if pivot_row[j]:
                            row[j] -= f * pivot_row[j]
        piv_r += 1
        if piv_r == len(m):
            break
    return m[:piv_r]


def rank(rows: Iterable[Sequence]) -> int:
    return len(row_echelon(rows))


def nullity(rows: Sequence[Sequence], ncols: int) -> int:
    """Dimension of the solution space of ``rows @ x = 0`` in ``ncols`` unknowns."""
    return ncols - rank(rows)
