"""Exact linear algebra over prime fields.

Matrices are ``numpy`` integer arrays with entries in ``range(p)``.  Subspaces
are carried as row-reduced echelon matrices (no zero rows), which makes them
canonical: two subspaces are equal iff their echelon matrices are equal.
"""

from __future__ import annotations

import itertools

import numpy as np


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def as_matrix(data, p: int, shape=None) -> np.ndarray:
    m = np.asarray(data, dtype=np.int64)
    if shape is not None:
        m = m.reshape(shape)
    return np.mod(m, p)


def frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` mod ``p`` with zero rows dropped."""
    a = np.array(m, dtype=np.int64) % p
    if a.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        for i in others:
            if i != r:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a[:r].copy(), pivots


def as_rows(a, width: int) -> np.ndarray:
    """``a`` as a 2-d array of row vectors of length ``width`` (safe for ``width == 0``)."""
    a = np.asarray(a, dtype=np.int64)
    if width == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return a.reshape(-1, width)


def span(rows, p: int, width: int) -> np.ndarray:
    """Canonical echelon basis for the span of ``rows`` (vectors of length ``width``)."""
    if width == 0:
        return np.zeros((0, 0), dtype=np.int64)
    a = np.asarray(rows, dtype=np.int64).reshape(-1, width)
    if a.shape[0] == 0:
        return np.zeros((0, width), dtype=np.int64)
    return rref(a, p)[0]


def pivots_of(echelon: np.ndarray) -> list[int]:
    return [int(np.nonzero(row)[0][0]) for row in echelon]


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return rref(m, p)[0].shape[0]


def nullspace(m: np.ndarray, p: int) -> np.ndarray:
    """Echelon basis (as rows) of ``{x : m @ x = 0}``."""
    m = np.asarray(m, dtype=np.int64)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    r, piv = rref(m, p)
    free = [c for c in range(cols) if c not in piv]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for i, pc in enumerate(piv):
            v[pc] = (-r[i, f]) % p
        basis.append(v)
    if not basis:
        return np.zeros((0, cols), dtype=np.int64)
    return rref(np.array(basis), p)[0]


def solve(m: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution ``x`` of ``m @ x = b`` (free variables set to 0), or None."""
    m = np.asarray(m, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    cols = m.shape[1]
    if m.shape[0] == 0:
        return np.zeros(cols, dtype=np.int64) if not np.any(b % p) else None
    aug = np.concatenate([m, b[:, None]], axis=1)
    r, piv = rref(aug, p)
    if piv and piv[-1] == cols:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for i, pc in enumerate(piv):
        x[pc] = r[i, cols]
    return x


def reduce_vector(v: np.ndarray, echelon: np.ndarray, p: int) -> np.ndarray:
    """Remainder of ``v`` modulo the span of an echelon matrix."""
    v = np.array(v, dtype=np.int64) % p
    for row in echelon:
        c = int(np.nonzero(row)[0][0])
        if v[c]:
            v = (v - v[c] * row) % p
    return v


def in_span(v: np.ndarray, echelon: np.ndarray, p: int) -> bool:
    return not np.any(reduce_vector(v, echelon, p))


def coordinates(v: np.ndarray, echelon: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of ``v`` in the echelon basis; raises if ``v`` is outside the span."""
    piv = pivots_of(echelon)
    coords = np.array([v[c] for c in piv], dtype=np.int64) % p
    back = coords @ echelon % p if len(piv) else np.zeros_like(v)
    if not np.array_equal(back, np.asarray(v, dtype=np.int64) % p):
        raise ValueError("vector is not in the span")
    return coords


def is_subspace(small: np.ndarray, big: np.ndarray, p: int) -> bool:
    return all(in_span(row, big, p) for row in small)


def complement_columns(echelon: np.ndarray, width: int) -> list[int]:
    """Standard basis indices completing an echelon span (lexicographically first complement)."""
    piv = set(pivots_of(echelon))
    return [c for c in range(width) if c not in piv]


def all_vectors(p: int, n: int):
    """Every vector of ``F_p^n`` in lexicographic order."""
    for t in itertools.product(range(p), repeat=n):
        yield np.array(t, dtype=np.int64)


def vector_grid(p: int, n: int) -> np.ndarray:
    """All ``p**n`` vectors of ``F_p^n`` as rows, lexicographic order."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.meshgrid(*[np.arange(p, dtype=np.int64)] * n, indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)
