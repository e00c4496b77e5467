"""Null spaces of small dense systems, floating point (SVD) or exact (Fractions)."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

def nullspace_float(rows: list[list], rtol: float = 1e-10) -> np.ndarray:
    """Kernel basis as columns.

    Columns are equilibrated so the rank decision does not depend on the
    scale of each unknown.  Rows are left alone: rows of a matching system
    are often small only because of cancellation, and rescaling them would
    promote their round-off to full weight.
    """
    m = np.array(rows, dtype=complex)
    ncol = m.shape[1] if m.ndim == 2 else 0
    if m.size == 0:
        return np.eye(ncol, dtype=complex)
    cs = np.abs(m).max(axis=0)
    cs = np.where(cs > 0, cs, 1.0)
    _, sv, vh = np.linalg.svd(m / cs)
    smax = sv[0] if sv.size else 0.0
    rank = int(np.sum(sv > rtol * smax)) if smax > 0 else 0
    return vh[rank:].conj().T / cs[:, None]


def rref_exact(rows: list[list]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(v) for v in r] for r in rows]
    ncol = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncol):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace_exact(rows: list[list], ncol: int | None = None) -> list[list[Fraction]]:
    """Kernel basis vectors (lists of Fractions), one per free column."""
    if ncol is None:
        ncol = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncol)] for j in range(ncol)]
    red, piv = rref_exact(rows)
    free = [c for c in range(ncol) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncol
        v[f] = Fraction(1)
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(v)
    return basis
