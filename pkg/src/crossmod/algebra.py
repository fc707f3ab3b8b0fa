"""Finite-dimensional commutative algebras over F_p given by structure constants.

A basis product is ``x_i * x_j = sum_k mul[i, j, k] x_k``.  Morphisms are
``target_dim x source_dim`` matrices acting on column coordinate vectors.
Actions of ``P`` on ``M`` are tensors ``act[i, j, k]`` with
``p_i . m_j = sum_k act[i, j, k] m_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import linalg as la
from .errors import (
    BadUnit,
    NotAnIdeal,
    NotAssociative,
    NotCommutative,
    NotCommutativeMultipliers,
    NotMultiplicative,
    NotPrime,
    PreconditionFailed,
    ShapeMismatch,
)
from .report import Report


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    prime: int
    mul: np.ndarray
    basis: tuple[str, ...]
    unit: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.mul.shape[0]

    def mult(self, u, v) -> np.ndarray:
        return np.einsum("i,j,ijk->k", u, v, self.mul) % self.prime

    def left_matrix(self, u) -> np.ndarray:
        """Matrix of ``x -> u * x``."""
        return np.einsum("i,ijk->kj", u, self.mul) % self.prime

    def e(self, i: int) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return v

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def element(self, coeffs) -> "AlgebraElement":
        return AlgebraElement(self, la.frozen(la.as_matrix(coeffs, self.prime, (self.dim,))))

    def gens(self) -> list["AlgebraElement"]:
        return [self.element(self.e(i)) for i in range(self.dim)]

    def same_as(self, other: "FiniteAlgebra") -> bool:
        """Equality of the structure (prime, constants, unit); basis names are ignored."""
        if self is other:
            return True
        if self.prime != other.prime or self.mul.shape != other.mul.shape:
            return False
        if not np.array_equal(self.mul, other.mul):
            return False
        if (self.unit is None) != (other.unit is None):
            return False
        return self.unit is None or np.array_equal(self.unit, other.unit)

    def is_zero_multiplication(self) -> bool:
        return not np.any(self.mul)

    def __repr__(self) -> str:
        return f"FiniteAlgebra(F_{self.prime}, dim={self.dim}, basis={list(self.basis)})"


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    parent: FiniteAlgebra
    coeffs: np.ndarray

    def _wrap(self, v) -> "AlgebraElement":
        return self.parent.element(v)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self._wrap(self.coeffs + other.coeffs)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self._wrap(self.coeffs - other.coeffs)

    def __neg__(self) -> "AlgebraElement":
        return self._wrap(-self.coeffs)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return self._wrap(self.parent.mult(self.coeffs, other.coeffs))
        return self._wrap(self.coeffs * int(other))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and other.parent.same_as(self.parent)
            and np.array_equal(other.coeffs, self.coeffs)
        )

    def __hash__(self) -> int:
        return hash((self.parent.prime, tuple(self.coeffs.tolist())))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __repr__(self) -> str:
        terms = [
            (f"{c}*{n}" if c != 1 else n)
            for c, n in zip(self.coeffs.tolist(), self.parent.basis)
            if c
        ]
        return " + ".join(terms) or "0"


def _vec(x) -> np.ndarray:
    if isinstance(x, AlgebraElement):
        return np.asarray(x.coeffs, dtype=np.int64)
    return np.asarray(x, dtype=np.int64)


# ----------------------------------------------------------------------------
# construction and validation


def first_noncommuting(mul: np.ndarray) -> tuple[int, int] | None:
    bad = np.argwhere(np.any(mul != mul.transpose(1, 0, 2), axis=2))
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def first_nonassociative(mul: np.ndarray, p: int) -> tuple[int, int, int] | None:
    left = np.einsum("ijl,lkm->ijkm", mul, mul) % p
    right = np.einsum("jkl,ilm->ijkm", mul, mul) % p
    bad = np.argwhere(np.any(left != right, axis=3))
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def find_unit(mul: np.ndarray, p: int) -> np.ndarray | None:
    """The unit of the algebra, if it has one (units are unique in commutative algebras)."""
    d = mul.shape[0]
    if d == 0:
        return np.zeros(0, dtype=np.int64)
    # unknowns e_a;  sum_a e_a mul[a, i, k] = delta_ik
    system = mul.transpose(1, 2, 0).reshape(d * d, d)
    rhs = np.eye(d, dtype=np.int64).reshape(d * d)
    return la.solve(system, rhs, p)


def mk_algebra(
    prime: int,
    dim: int,
    mul,
    basis_names: Sequence[str] | None = None,
    unit=None,
) -> FiniteAlgebra:
    """Validated algebra from raw structure constants."""
    if not la.is_prime(int(prime)):
        raise NotPrime(f"{prime} is not prime")
    p = int(prime)
    try:
        c = la.as_matrix(mul, p, (dim, dim, dim)) if dim else np.zeros((0, 0, 0), np.int64)
    except ValueError as exc:
        raise ShapeMismatch(f"structure constants do not have shape {(dim,) * 3}") from exc
    names = tuple(basis_names) if basis_names is not None else tuple(f"x{i}" for i in range(dim))
    if len(names) != dim:
        raise ShapeMismatch(f"{len(names)} basis names for dimension {dim}")
    bad = first_noncommuting(c)
    if bad:
        raise NotCommutative(*bad)
    bad3 = first_nonassociative(c, p)
    if bad3:
        raise NotAssociative(*bad3)
    u = None
    if unit is not None:
        u = la.as_matrix(unit, p)
        if u.shape != (dim,):
            raise ShapeMismatch("unit vector has the wrong length")
        for i in range(dim):
            if not np.array_equal(np.einsum("i,ik->k", u, c[:, i, :]) % p, np.eye(dim, dtype=np.int64)[i]):
                raise BadUnit(i)
        u = la.frozen(u)
    return FiniteAlgebra(p, la.frozen(c), names, u)


def _algebra(p: int, mul: np.ndarray, names=None, unit=None, detect_unit=False) -> FiniteAlgebra:
    """Trusted constructor for algebras built by the library itself."""
    d = mul.shape[0]
    names = tuple(names) if names is not None else tuple(f"x{i}" for i in range(d))
    if unit is None and detect_unit:
        unit = find_unit(mul, p)
    return FiniteAlgebra(p, la.frozen(mul % p), names, None if unit is None else la.frozen(np.asarray(unit) % p))


def zero_algebra(p: int) -> FiniteAlgebra:
    return FiniteAlgebra(p, la.frozen(np.zeros((0, 0, 0), np.int64)), ())


def prime_field(p: int, name: str = "e") -> FiniteAlgebra:
    return mk_algebra(p, 1, [[[1]]], [name], unit=[1])


def zero_mult_algebra(p: int, dim: int, names=None) -> FiniteAlgebra:
    return mk_algebra(p, dim, np.zeros((dim, dim, dim), np.int64), names)


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra) -> FiniteAlgebra:
    da, db = a.dim, b.dim
    mul = np.zeros((da + db,) * 3, dtype=np.int64)
    mul[:da, :da, :da] = a.mul
    mul[da:, da:, da:] = b.mul
    unit = None
    if a.unit is not None and b.unit is not None:
        unit = np.concatenate([a.unit, b.unit])
    names = [f"({n},0)" for n in a.basis] + [f"(0,{n})" for n in b.basis]
    return _algebra(a.prime, mul, names, unit)


# ----------------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    source: FiniteAlgebra
    target: FiniteAlgebra
    matrix: np.ndarray

    def __call__(self, v) -> np.ndarray:
        return self.matrix @ _vec(v) % self.source.prime

    def __matmul__(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """``self @ other`` is the composite ``self o other``."""
        if not other.target.same_as(self.source):
            raise ShapeMismatch("composition of non-composable morphisms")
        return AlgebraMorphism(other.source, self.target, la.frozen(self.matrix @ other.matrix % self.source.prime))

    def same_as(self, other: "AlgebraMorphism") -> bool:
        return (
            self.source.same_as(other.source)
            and self.target.same_as(other.target)
            and np.array_equal(self.matrix, other.matrix)
        )

    def key(self) -> tuple:
        return tuple(self.matrix.reshape(-1).tolist())

    def __repr__(self) -> str:
        return f"AlgebraMorphism({self.source.dim}->{self.target.dim}, {self.matrix.tolist()})"


def first_nonmultiplicative(src: FiniteAlgebra, tgt: FiniteAlgebra, m: np.ndarray) -> tuple[int, int] | None:
    p = src.prime
    lhs = np.einsum("ijk,lk->ijl", src.mul, m) % p
    rhs = np.einsum("ai,bj,abl->ijl", m, m, tgt.mul) % p
    bad = np.argwhere(np.any(lhs != rhs, axis=2))
    return tuple(int(x) for x in bad[0]) if len(bad) else None


def mk_morphism(source: FiniteAlgebra, target: FiniteAlgebra, matrix) -> AlgebraMorphism:
    if source.prime != target.prime:
        raise ShapeMismatch("morphism between algebras over different primes")
    try:
        m = la.as_matrix(matrix, source.prime, (target.dim, source.dim))
    except ValueError as exc:
        raise ShapeMismatch(f"matrix is not {target.dim}x{source.dim}") from exc
    bad = first_nonmultiplicative(source, target, m)
    if bad:
        raise NotMultiplicative(*bad)
    return AlgebraMorphism(source, target, la.frozen(m))


def _morphism(source: FiniteAlgebra, target: FiniteAlgebra, matrix) -> AlgebraMorphism:
    m = np.asarray(matrix, dtype=np.int64).reshape(target.dim, source.dim) % source.prime
    return AlgebraMorphism(source, target, la.frozen(m))


def identity(a: FiniteAlgebra) -> AlgebraMorphism:
    return _morphism(a, a, np.eye(a.dim, dtype=np.int64))


def zero_morphism(a: FiniteAlgebra, b: FiniteAlgebra) -> AlgebraMorphism:
    return _morphism(a, b, np.zeros((b.dim, a.dim), dtype=np.int64))


def is_multiplicative(f: AlgebraMorphism) -> bool:
    return first_nonmultiplicative(f.source, f.target, f.matrix) is None


# ----------------------------------------------------------------------------
# ideals, kernels, quotients


@dataclass(frozen=True, eq=False)
class Ideal:
    parent: FiniteAlgebra
    span: np.ndarray

    @property
    def dim(self) -> int:
        return self.span.shape[0]

    def contains(self, v) -> bool:
        return la.in_span(_vec(v), self.span, self.parent.prime)

    def same_as(self, other: "Ideal") -> bool:
        return self.parent.same_as(other.parent) and np.array_equal(self.span, other.span)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_everything(self) -> bool:
        return self.dim == self.parent.dim

    def __repr__(self) -> str:
        return f"Ideal(dim={self.dim} in dim {self.parent.dim}, span={self.span.tolist()})"


def subspace_is_ideal(a: FiniteAlgebra, echelon: np.ndarray) -> tuple[int, int] | None:
    """First (row, basis index) whose product leaves the subspace, or None."""
    for r, row in enumerate(echelon):
        for i in range(a.dim):
            if not la.in_span(a.mult(row, a.e(i)), echelon, a.prime):
                return (r, i)
    return None


def mk_ideal(a: FiniteAlgebra, rows) -> Ideal:
    span = la.span(rows, a.prime, a.dim)
    bad = subspace_is_ideal(a, span)
    if bad is not None:
        raise NotAnIdeal(f"span row {bad[0]} times x{bad[1]} leaves the subspace")
    return Ideal(a, la.frozen(span))


class KernelImage(NamedTuple):
    kernel: Ideal
    image: np.ndarray
    is_mono: bool
    is_epi: bool


def kernel_image(f: AlgebraMorphism) -> KernelImage:
    p = f.source.prime
    ker = la.nullspace(f.matrix, p) if f.source.dim else np.zeros((0, 0), np.int64)
    img = la.span(f.matrix.T, p, f.target.dim) if f.source.dim else np.zeros((0, f.target.dim), np.int64)
    return KernelImage(
        Ideal(f.source, la.frozen(la.as_rows(ker, f.source.dim))),
        la.frozen(img),
        ker.shape[0] == 0,
        img.shape[0] == f.target.dim,
    )


def ideal_generated(a: FiniteAlgebra, gens: Sequence) -> Ideal:
    """Smallest ideal containing ``gens``: close ``span`` under ``span * basis``."""
    p = a.prime
    span = la.span([_vec(g) for g in gens], p, a.dim)
    for _ in range(a.dim + 1):
        products = [a.mult(row, a.e(i)) for row in span for i in range(a.dim)]
        grown = la.span(list(span) + products, p, a.dim)
        if grown.shape[0] == span.shape[0]:
            return Ideal(a, la.frozen(span))
        span = grown
    raise AssertionError("ideal closure did not stabilise within dim iterations")


class Quotient(NamedTuple):
    algebra: FiniteAlgebra
    projection: AlgebraMorphism
    lift: np.ndarray  # dim A x dim(A/I): complement basis vectors as columns


def quotient_by_ideal(a: FiniteAlgebra, ideal: Ideal | np.ndarray) -> Quotient:
    """``A/I`` on the lexicographically first complement of the echelon basis of ``I``."""
    p = a.prime
    span = ideal.span if isinstance(ideal, Ideal) else la.span(ideal, p, a.dim)
    bad = subspace_is_ideal(a, span)
    if bad is not None:
        raise NotAnIdeal(f"span row {bad[0]} times x{bad[1]} leaves the subspace")
    keep = la.complement_columns(span, a.dim)
    q = len(keep)
    proj = np.zeros((q, a.dim), dtype=np.int64)
    for i in range(a.dim):
        r = la.reduce_vector(a.e(i), span, p)
        proj[:, i] = r[keep]
    lift = np.zeros((a.dim, q), dtype=np.int64)
    for j, c in enumerate(keep):
        lift[c, j] = 1
    mul = np.zeros((q, q, q), dtype=np.int64)
    for i in range(q):
        for j in range(q):
            mul[i, j] = proj @ a.mult(lift[:, i], lift[:, j]) % p
    unit = None if a.unit is None else proj @ a.unit % p
    names = [a.basis[c] for c in keep]
    qa = _algebra(p, mul, names, unit)
    return Quotient(qa, _morphism(a, qa, proj), la.frozen(lift))


class Subalgebra(NamedTuple):
    algebra: FiniteAlgebra
    inclusion: AlgebraMorphism


def subalgebra(a: FiniteAlgebra, rows, names=None, detect_unit=True) -> Subalgebra:
    """Algebra on an echelon basis of a multiplicatively closed subspace."""
    p = a.prime
    span = la.span(rows, p, a.dim)
    n = span.shape[0]
    mul = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            mul[i, j] = la.coordinates(a.mult(span[i], span[j]), span, p)
    if names is None:
        names = [_name_vector(a, row) for row in span]
    sub = _algebra(p, mul, names, detect_unit=detect_unit)
    return Subalgebra(sub, _morphism(sub, a, span.T))


def _name_vector(a: FiniteAlgebra, v) -> str:
    terms = [(f"{c}{n}" if c != 1 else n) for c, n in zip(np.asarray(v).tolist(), a.basis) if c]
    return "+".join(terms) or "0"


def fiber_product(f: AlgebraMorphism, g: AlgebraMorphism):
    """``A x_C B = {(a, b) | f(a) = g(b)}`` with its two projections."""
    if not f.target.same_as(g.target):
        raise ShapeMismatch("fiber product needs a common target")
    a, b = f.source, g.source
    p = a.prime
    stacked = np.concatenate([f.matrix, (-g.matrix) % p], axis=1) % p
    width = a.dim + b.dim
    if width == 0:
        ker = np.zeros((0, 0), np.int64)
    else:
        ker = la.nullspace(stacked, p) if stacked.shape[0] else np.eye(width, dtype=np.int64)
    prod = direct_product(a, b)
    sub = subalgebra(prod, la.as_rows(ker, width))
    inc = sub.inclusion.matrix
    p1 = _morphism(sub.algebra, a, inc[: a.dim])
    p2 = _morphism(sub.algebra, b, inc[a.dim :])
    return sub.algebra, p1, p2


# ----------------------------------------------------------------------------
# actions


@dataclass(frozen=True, eq=False)
class AlgebraAction:
    actor: FiniteAlgebra
    acted: FiniteAlgebra
    act: np.ndarray

    def apply(self, p_vec, m_vec) -> np.ndarray:
        return np.einsum("i,j,ijk->k", _vec(p_vec), _vec(m_vec), self.act) % self.actor.prime

    def matrix_of(self, p_vec) -> np.ndarray:
        """Matrix of ``m -> p . m``."""
        return np.einsum("i,ijk->kj", _vec(p_vec), self.act) % self.actor.prime

    def same_as(self, other: "AlgebraAction") -> bool:
        return (
            self.actor.same_as(other.actor)
            and self.acted.same_as(other.acted)
            and np.array_equal(self.act, other.act)
        )

    def __repr__(self) -> str:
        return f"AlgebraAction({self.actor.dim} on {self.acted.dim})"


def mk_action(actor: FiniteAlgebra, acted: FiniteAlgebra, act) -> AlgebraAction:
    if actor.prime != acted.prime:
        raise ShapeMismatch("action between algebras over different primes")
    try:
        t = la.as_matrix(act, actor.prime, (actor.dim, acted.dim, acted.dim))
    except ValueError as exc:
        raise ShapeMismatch(f"action constants do not have shape {(actor.dim, acted.dim, acted.dim)}") from exc
    return AlgebraAction(actor, acted, la.frozen(t))


def multiplication_action(a: FiniteAlgebra) -> AlgebraAction:
    return AlgebraAction(a, a, a.mul)


def zero_action(actor: FiniteAlgebra, acted: FiniteAlgebra) -> AlgebraAction:
    return AlgebraAction(actor, acted, la.frozen(np.zeros((actor.dim, acted.dim, acted.dim), np.int64)))


def action_via(f: AlgebraMorphism, act: AlgebraAction) -> AlgebraAction:
    """Pull an action back along ``f``: ``s . m = f(s) . m``."""
    t = np.einsum("ri,rjk->ijk", f.matrix, act.act) % f.source.prime
    return AlgebraAction(f.source, act.acted, la.frozen(t))


def action_from_function(actor: FiniteAlgebra, acted: FiniteAlgebra, fn) -> AlgebraAction:
    t = np.zeros((actor.dim, acted.dim, acted.dim), dtype=np.int64)
    for i in range(actor.dim):
        for j in range(acted.dim):
            t[i, j] = fn(actor.e(i), acted.e(j))
    return AlgebraAction(actor, acted, la.frozen(t % actor.prime))


def check_action(act: AlgebraAction) -> Report:
    """Associativity, multiplicativity over the acted algebra, and unitality."""
    P, M = act.actor, act.acted
    rep = Report("action")
    for i in range(P.dim):
        for j in range(P.dim):
            pp = P.mult(P.e(i), P.e(j))
            for k in range(M.dim):
                rep.expect(
                    "action.assoc",
                    (i, j, k),
                    act.apply(pp, M.e(k)),
                    act.apply(P.e(i), act.apply(P.e(j), M.e(k))),
                )
    for i in range(P.dim):
        for j in range(M.dim):
            for k in range(M.dim):
                rep.expect(
                    "action.mult",
                    (i, j, k),
                    act.apply(P.e(i), M.mult(M.e(j), M.e(k))),
                    M.mult(act.apply(P.e(i), M.e(j)), M.e(k)),
                )
    if P.unit is not None:
        for j in range(M.dim):
            rep.expect("action.unit", (j,), act.apply(P.unit, M.e(j)), M.e(j))
    return rep


def check_algebra(a: FiniteAlgebra) -> Report:
    """Commutativity, associativity and (if designated) the unit, over all basis tuples."""
    p, c = a.prime, a.mul
    rep = Report("algebra")
    rep.expect_all("commutative", c % p, c.transpose(1, 0, 2) % p)
    lhs = np.einsum("ijl,lkm->ijkm", c, c) % p
    rhs = np.einsum("jkl,ilm->ijkm", c, c) % p
    rep.expect_all("associative", lhs, rhs)
    if a.unit is not None:
        rep.expect_all("unit", np.einsum("a,aim->im", a.unit, c) % p, np.eye(a.dim, dtype=np.int64))
    return rep


def check_morphism(f: AlgebraMorphism) -> Report:
    """Multiplicativity over all source basis pairs."""
    p = f.source.prime
    F = f.matrix
    rep = Report("algebra morphism")
    rep.expect_all(
        "multiplicative",
        np.einsum("mk,ijk->ijm", F, f.source.mul) % p,
        np.einsum("ai,bj,abm->ijm", F, F, f.target.mul) % p,
    )
    return rep


# ----------------------------------------------------------------------------
# multipliers


def annihilator(r: FiniteAlgebra) -> np.ndarray:
    """Echelon basis of ``{a : a * x = 0 for all x}``."""
    d = r.dim
    # rows: for each basis x_i and output coordinate k, sum_a a_a mul[a, i, k]
    system = r.mul.transpose(1, 2, 0).reshape(d * d, d)
    return la.nullspace(system, r.prime) if d else np.zeros((0, 0), np.int64)


def square_span(r: FiniteAlgebra) -> np.ndarray:
    return la.span(r.mul.reshape(-1, r.dim), r.prime, r.dim) if r.dim else np.zeros((0, 0), np.int64)


def multiplier_algebra(r: FiniteAlgebra) -> tuple[FiniteAlgebra, AlgebraMorphism]:
    """Mac Lane's multiplier algebra ``M(R)`` with ``mu: r -> (x -> r x)``.

    Requires ``Ann(R) = 0`` or ``R^2 = R``.
    """
    p, d = r.prime, r.dim
    if d == 0:
        m = _algebra(p, np.zeros((0, 0, 0), np.int64), (), np.zeros(0, np.int64))
        return m, _morphism(r, m, np.zeros((0, 0), np.int64))
    ann = annihilator(r)
    sq = square_span(r)
    if ann.shape[0] != 0 and sq.shape[0] != d:
        raise PreconditionFailed("multiplier algebra needs Ann(R) = 0 or R^2 = R")
    mats = _multiplier_matrices(r)
    n = len(mats)
    flat = np.array([m.reshape(-1) for m in mats]).reshape(n, d * d)
    coords_sys = flat.T  # (d*d) x n

    def coords(mat):
        x = la.solve(coords_sys, mat.reshape(-1) % p, p)
        if x is None:
            raise NotCommutativeMultipliers("multiplier composite left the solution space")
        return x

    mul = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            ab = mats[a] @ mats[b] % p
            ba = mats[b] @ mats[a] % p
            if not np.array_equal(ab, ba):
                raise NotCommutativeMultipliers(f"multipliers {a} and {b} do not commute")
            mul[a, b] = coords(ab)
    unit = coords(np.eye(d, dtype=np.int64))
    names = [f"d{a}" for a in range(n)]
    m_alg = _algebra(p, mul, names, unit)
    mu = np.zeros((n, d), dtype=np.int64)
    for i in range(d):
        mu[:, i] = coords(r.left_matrix(r.e(i)))
    return m_alg, _morphism(r, m_alg, mu)


def multiplier_action(r: FiniteAlgebra, m_alg: FiniteAlgebra) -> AlgebraAction:
    """``M(R)`` acting on ``R`` by evaluation ``delta . r = delta(r)``."""
    mats = _multiplier_matrices(r)
    t = np.zeros((m_alg.dim, r.dim, r.dim), dtype=np.int64)
    for a, mat in enumerate(mats):
        t[a] = mat.T
    return AlgebraAction(m_alg, r, la.frozen(t % r.prime))


def _multiplier_matrices(r: FiniteAlgebra) -> list[np.ndarray]:
    p, d = r.prime, r.dim
    rows = []
    for i in range(d):
        li = r.left_matrix(r.e(i))
        for j in range(d):
            for k in range(d):
                row = np.zeros(d * d, dtype=np.int64)
                for l in range(d):
                    row[k * d + l] += r.mul[i, j, l]
                    row[l * d + j] -= li[k, l]
                rows.append(row % p)
    if not rows:
        return []
    return [s.reshape(d, d) for s in la.nullspace(np.array(rows), p)]
