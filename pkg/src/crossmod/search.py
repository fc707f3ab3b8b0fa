"""Exhaustive search for multiplicative maps and actions.

Two strategies:

* column-by-column assignment of basis images with multiplicativity pruning,
  for unconstrained algebra morphisms;
* exact solution of all *linear* constraints first, then a vectorised
  multiplicativity filter over the (usually tiny) affine solution space, for
  2-crossed module morphisms and actions.

Both respect a candidate limit (default ``10**7``, overridable through the
``CROSSMOD_SEARCH_LIMIT`` environment variable).
"""

from __future__ import annotations

import os

import numpy as np

from . import linalg as la
from .algebra import FiniteAlgebra
from .errors import SearchSpaceTooLarge

DEFAULT_LIMIT = 10**7
_CHUNK = 1 << 16


def default_limit() -> int:
    env = os.environ.get("CROSSMOD_SEARCH_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


def _guard(p: int, exponent: int, limit: int | None) -> None:
    limit = default_limit() if limit is None else limit
    size = p**exponent
    if size > limit:
        raise SearchSpaceTooLarge(size, limit)


def multiplicative_mask(src: FiniteAlgebra, tgt: FiniteAlgebra, batch: np.ndarray) -> np.ndarray:
    """Which matrices in ``batch`` (shape ``(n, tgt.dim, src.dim)``) are multiplicative."""
    p = src.prime
    if batch.shape[0] == 0 or src.dim == 0:
        return np.ones(batch.shape[0], dtype=bool)
    lhs = np.einsum("ijk,nmk->nijm", src.mul, batch) % p
    rhs = np.einsum("nai,nbj,abm->nijm", batch, batch, tgt.mul) % p
    return np.all((lhs == rhs).reshape(batch.shape[0], -1), axis=1)


def enum_multiplicative(src: FiniteAlgebra, tgt: FiniteAlgebra, limit: int | None = None) -> np.ndarray:
    """All multiplicative linear maps ``src -> tgt`` as an array ``(n, tgt.dim, src.dim)``.

    Columns (images of basis vectors) are assigned in order; the pair
    ``(i, j)`` is tested as soon as every column its product touches is fixed.
    """
    p, a, b = src.prime, src.dim, tgt.dim
    _guard(p, a * b, limit)
    if a == 0:
        return np.zeros((1, b, 0), dtype=np.int64)
    level = {}
    for i in range(a):
        for j in range(i, a):
            ks = np.nonzero(src.mul[i, j])[0]
            lv = max([i, j] + [int(k) for k in ks])
            level.setdefault(lv, []).append((i, j))
    images = la.vector_grid(p, b)  # (p^b, b)
    partial = np.zeros((1, b, 0), dtype=np.int64)
    for t in range(a):
        n = partial.shape[0]
        ext = np.concatenate(
            [np.repeat(partial, len(images), axis=0), np.tile(images, (n, 1))[:, :, None]], axis=2
        )
        for i, j in level.get(t, []):
            cols = ext.shape[2]
            lhs = np.einsum("k,nmk->nm", src.mul[i, j, :cols], ext) % p
            rhs = np.einsum("na,nb,abm->nm", ext[:, :, i], ext[:, :, j], tgt.mul) % p
            ext = ext[np.all(lhs == rhs, axis=1)]
        partial = ext
    return partial


class LinearSystem:
    """Affine constraints ``A x = y`` on a flattened unknown, accumulated blockwise."""

    def __init__(self, nvars: int, p: int):
        self.n = nvars
        self.p = p
        self.rows: list[np.ndarray] = []
        self.rhs: list[np.ndarray] = []

    def add(self, coeffs: np.ndarray, rhs=None) -> None:
        coeffs = np.asarray(coeffs, dtype=np.int64)
        neq = coeffs.shape[0]
        coeffs = coeffs.reshape(neq, self.n) % self.p
        if rhs is None:
            rhs = np.zeros(neq, dtype=np.int64)
        rhs = np.asarray(rhs, dtype=np.int64).reshape(neq) % self.p
        self.rows.append(coeffs)
        self.rhs.append(rhs)

    def solution_space(self) -> tuple[np.ndarray, np.ndarray] | None:
        """``(particular, nullspace basis)`` or None if inconsistent."""
        if self.n == 0:
            if self.rhs and np.any(np.concatenate(self.rhs)):
                return None
            return np.zeros(0, np.int64), np.zeros((0, 0), np.int64)
        if not self.rows:
            return np.zeros(self.n, np.int64), np.eye(self.n, dtype=np.int64)
        A = np.concatenate(self.rows, axis=0)
        y = np.concatenate(self.rhs)
        x = la.solve(A, y, self.p)
        if x is None:
            return None
        return x, la.nullspace(A, self.p)


def affine_points(particular: np.ndarray, basis: np.ndarray, p: int, limit: int | None = None):
    """Yield chunks of all points ``particular + span(basis)``."""
    r = basis.shape[0]
    _guard(p, r, limit)
    if r == 0:
        yield particular[None, :] % p
        return
    total = p**r
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        digits = np.zeros((idx.size, r), dtype=np.int64)
        rem = idx.copy()
        for k in range(r - 1, -1, -1):
            digits[:, k] = rem % p
            rem //= p
        yield (particular[None, :] + digits @ basis) % p


# ----------------------------------------------------------------------------
# coefficient builders for unknown matrices F (rows r, cols c), flattened row-major


def left_known(G: np.ndarray, r: int, c: int) -> np.ndarray:
    """Coefficients of ``G @ F`` (one equation per entry)."""
    G = np.asarray(G, dtype=np.int64)
    g = G.shape[0]
    return np.einsum("am,ck->acmk", G.reshape(g, r), np.eye(c, dtype=np.int64)).reshape(g * c, r * c)


def action_compat(act_src: np.ndarray, base: np.ndarray, act_tgt: np.ndarray, r: int, c: int) -> np.ndarray:
    """Coefficients of ``F(p . x) - base(p) . F(x)`` over all basis pairs ``(p, x)``.

    ``act_src``: ``(dP, c, c)``; ``act_tgt``: ``(dP', r, r)``; ``base``: ``(dP', dP)``.
    """
    dP = act_src.shape[0]
    w = np.einsum("ai,abm->ibm", base, act_tgt)  # (dP, r, r)
    t1 = np.einsum("rm,ijc->ijmrc", np.eye(r, dtype=np.int64), act_src)
    t2 = np.einsum("irm,cj->ijmrc", w, np.eye(c, dtype=np.int64))
    return (t1 - t2).reshape(dP * c * r, r * c)


def bilinear_compat(lift_src: np.ndarray, r: int, c: int) -> np.ndarray:
    """Coefficients of ``F({m_i, m_j})`` over all basis pairs (rhs supplied separately)."""
    n = lift_src.shape[0]
    return np.einsum("rm,ijc->ijmrc", np.eye(r, dtype=np.int64), lift_src).reshape(n * n * r, r * c)


def multiplicative_solutions(
    src: FiniteAlgebra, tgt: FiniteAlgebra, system: LinearSystem, limit: int | None = None
) -> np.ndarray:
    """Multiplicative maps among the solutions of ``system`` as ``(n, tgt.dim, src.dim)``."""
    space = system.solution_space()
    r, c = tgt.dim, src.dim
    if space is None:
        return np.zeros((0, r, c), dtype=np.int64)
    part, basis = space
    out = []
    for chunk in affine_points(part, basis.reshape(basis.shape[0], r * c), src.prime, limit):
        mats = chunk.reshape(chunk.shape[0], r, c)
        out.append(mats[multiplicative_mask(src, tgt, mats)])
    return np.concatenate(out, axis=0) if out else np.zeros((0, r, c), dtype=np.int64)


# ----------------------------------------------------------------------------
# actions


def enum_actions(
    actor: FiniteAlgebra,
    acted: FiniteAlgebra,
    bdry: np.ndarray | None = None,
    limit: int | None = None,
) -> np.ndarray:
    """All valid actions of ``actor`` on ``acted``; with ``bdry`` (acted -> actor), only
    those making the boundary equivariant.  Returns ``(n, dP, dM, dM)``."""
    p, dP, dM = actor.prime, actor.dim, acted.dim
    nv = dP * dM * dM
    if nv == 0:
        return np.zeros((1, dP, dM, dM), dtype=np.int64)
    sys = LinearSystem(nv, p)
    I_P = np.eye(dP, dtype=np.int64)
    # p_i . (m_j m_l) - (p_i . m_j) m_l = 0, unknown act[i, k, m] at (i*dM + k)*dM + m
    t1 = np.einsum("ia,jlk,mb->ijlmakb", I_P, acted.mul, np.eye(dM, dtype=np.int64))
    t2 = np.einsum("ia,jk,blm->ijlmakb", I_P, np.eye(dM, dtype=np.int64), acted.mul)
    sys.add((t1 - t2).reshape(-1, nv))
    if actor.unit is not None:
        coeff = np.einsum("a,jk,mb->jmakb", actor.unit, np.eye(dM, dtype=np.int64), np.eye(dM, dtype=np.int64))
        sys.add(coeff.reshape(-1, nv), np.eye(dM, dtype=np.int64).reshape(-1))
    if bdry is not None:
        # bdry(p_i . m_j) = p_i bdry(m_j)
        coeff = np.einsum("ia,jk,qb->ijqakb", I_P, np.eye(dM, dtype=np.int64), bdry)
        rhs = np.einsum("kj,ikq->ijq", bdry, actor.mul)
        sys.add(coeff.reshape(-1, nv), rhs.reshape(-1))
    space = sys.solution_space()
    if space is None:
        return np.zeros((0, dP, dM, dM), dtype=np.int64)
    part, basis = space
    out = []
    for chunk in affine_points(part, basis.reshape(-1, nv), p, limit):
        t = chunk.reshape(-1, dP, dM, dM)
        lhs = np.einsum("ijq,nqkm->nijkm", actor.mul, t) % p
        rhs = np.einsum("njkr,nirm->nijkm", t, t) % p
        ok = np.all((lhs == rhs).reshape(t.shape[0], -1), axis=1)
        out.append(t[ok])
    return np.concatenate(out, axis=0) if out else np.zeros((0, dP, dM, dM), dtype=np.int64)
