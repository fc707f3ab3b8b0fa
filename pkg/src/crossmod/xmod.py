"""Pre-crossed and crossed modules of commutative algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from . import linalg as la
from .algebra import (
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
    Ideal,
    _morphism,
    annihilator,
    check_action,
    fiber_product,
    identity,
    ideal_generated,
    kernel_image,
    multiplication_action,
    multiplier_action,
    multiplier_algebra,
    subalgebra,
    zero_morphism,
)
from .errors import ShapeMismatch
from .report import Report


@dataclass(frozen=True, eq=False)
class PreCrossedModule:
    C: FiniteAlgebra
    R: FiniteAlgebra
    bdry: AlgebraMorphism
    action: AlgebraAction

    def __post_init__(self):
        if not (self.bdry.source.same_as(self.C) and self.bdry.target.same_as(self.R)):
            raise ShapeMismatch("boundary does not go from C to R")
        if not (self.action.actor.same_as(self.R) and self.action.acted.same_as(self.C)):
            raise ShapeMismatch("action is not an action of R on C")

    def same_as(self, other: "PreCrossedModule") -> bool:
        return self.bdry.same_as(other.bdry) and self.action.same_as(other.action)

    def peiffer_commutator(self, c, c2) -> np.ndarray:
        """``<c, c'> = d(c) . c' - c c'``."""
        return (self.action.apply(self.bdry(c), c2) - self.C.mult(c, c2)) % self.C.prime

    def __repr__(self) -> str:
        return f"{type(self).__name__}(C dim {self.C.dim} -> R dim {self.R.dim})"


class CrossedModule(PreCrossedModule):
    pass


def _equivariance_tensors(X: PreCrossedModule):
    p = X.C.prime
    B, act = X.bdry.matrix, X.action.act
    lhs = np.einsum("ijk,mk->ijm", act, B) % p
    rhs = np.einsum("kj,ikm->ijm", B, X.R.mul) % p
    return lhs, rhs


def _peiffer_tensors(X: PreCrossedModule):
    p = X.C.prime
    lhs = np.einsum("ki,kjm->ijm", X.bdry.matrix, X.action.act) % p
    return lhs, X.C.mul % p


def check_precrossed(X: PreCrossedModule) -> Report:
    rep = Report("pre-crossed module")
    rep.merge(check_action(X.action))
    rep.expect_all("equivariance", *_equivariance_tensors(X))
    return rep


def check_crossed(X: PreCrossedModule) -> Report:
    rep = check_precrossed(X)
    rep.subject = "crossed module"
    rep.expect_all("peiffer", *_peiffer_tensors(X))
    return rep


def as_crossed(X: PreCrossedModule) -> CrossedModule:
    return CrossedModule(X.C, X.R, X.bdry, X.action)


def peiffer_ideal(X: PreCrossedModule) -> Ideal:
    """Ideal of ``C`` generated by the Peiffer commutators of basis pairs."""
    gens = [X.peiffer_commutator(X.C.e(i), X.C.e(j)) for i in range(X.C.dim) for j in range(X.C.dim)]
    return ideal_generated(X.C, gens)


def check_xmod_morphism(theta: AlgebraMorphism, phi: AlgebraMorphism, X: PreCrossedModule, Y: PreCrossedModule) -> Report:
    """``d' theta = phi d`` and ``theta(r . c) = phi(r) . theta(c)``."""
    rep = Report("crossed module morphism")
    rep.require("endpoints", theta.source.same_as(X.C) and theta.target.same_as(Y.C)
                and phi.source.same_as(X.R) and phi.target.same_as(Y.R))
    if not rep.ok:
        return rep
    p = X.C.prime
    rep.expect_all("square", (Y.bdry.matrix @ theta.matrix % p).T, (phi.matrix @ X.bdry.matrix % p).T)
    lhs = np.einsum("mk,ijk->ijm", theta.matrix, X.action.act) % p
    rhs = np.einsum("ai,bj,abm->ijm", phi.matrix, theta.matrix, Y.action.act) % p
    rep.expect_all("action", lhs, rhs)
    return rep


# ----------------------------------------------------------------------------
# standard examples


def ideal_pair(a: FiniteAlgebra, ideal: Ideal) -> CrossedModule:
    """``(I, A, inclusion)`` with ``A`` acting by multiplication."""
    sub, inc = subalgebra(a, ideal.span, detect_unit=True)
    span = inc.matrix.T
    t = np.zeros((a.dim, sub.dim, sub.dim), dtype=np.int64)
    for i in range(a.dim):
        for j in range(sub.dim):
            t[i, j] = la.coordinates(a.mult(a.e(i), span[j]), span, a.prime)
    return CrossedModule(sub, a, inc, AlgebraAction(a, sub, la.frozen(t)))


def zero_boundary_module(m: FiniteAlgebra, r: FiniteAlgebra, action: AlgebraAction) -> PreCrossedModule:
    """An ``R``-module ``M`` (zero multiplication) with the zero map to ``R``."""
    X = PreCrossedModule(m, r, zero_morphism(m, r), action)
    return as_crossed(X) if m.is_zero_multiplication() else X


def multiplier_xmod(r: FiniteAlgebra) -> CrossedModule:
    """``mu: R -> M(R)`` with ``M(R)`` acting by evaluation."""
    m_alg, mu = multiplier_algebra(r)
    return CrossedModule(r, m_alg, mu, multiplier_action(r, m_alg))


def is_annihilator_epi(f: AlgebraMorphism) -> bool:
    """Whether ``f`` is onto with kernel inside the annihilator of its source."""
    ki = kernel_image(f)
    if not ki.is_epi:
        return False
    ann = annihilator(f.source)
    return la.is_subspace(ki.kernel.span, la.as_rows(ann, f.source.dim), f.source.prime)


def annihilator_epi_action(f: AlgebraMorphism) -> AlgebraAction:
    """``r . c = c_bar c`` for a chosen pre-image ``c_bar`` of ``r``; used to test the recogniser."""
    C, R = f.source, f.target
    p = C.prime
    t = np.zeros((R.dim, C.dim, C.dim), dtype=np.int64)
    for i in range(R.dim):
        pre = la.solve(f.matrix, R.e(i), p)
        for j in range(C.dim):
            t[i, j] = C.mult(pre, C.e(j))
    return AlgebraAction(R, C, la.frozen(t))


# ----------------------------------------------------------------------------
# functors to and from algebras


def functor_delta(X: PreCrossedModule) -> FiniteAlgebra:
    return X.R


def functor_gamma(a: FiniteAlgebra) -> CrossedModule:
    return CrossedModule(a, a, identity(a), multiplication_action(a))


# ----------------------------------------------------------------------------
# pullback along phi: S -> R


class PullbackMiddle(NamedTuple):
    algebra: FiniteAlgebra
    to_c: AlgebraMorphism  # (c, s) -> c
    to_s: AlgebraMorphism  # (c, s) -> s
    action: AlgebraAction  # s' . (c, s) = (phi(s') . c, s' s)
    rows: np.ndarray  # echelon basis inside C x S


def pullback_middle(phi: AlgebraMorphism, bdry: AlgebraMorphism, action: AlgebraAction) -> PullbackMiddle:
    """``C x_R S`` with the diagonal ``S``-action."""
    S, C = phi.source, bdry.source
    p = S.prime
    Q, to_c, to_s = fiber_product(bdry, phi)
    rows = np.concatenate([to_c.matrix, to_s.matrix], axis=0).T
    rows = la.as_rows(rows, C.dim + S.dim)
    t = np.zeros((S.dim, Q.dim, Q.dim), dtype=np.int64)
    for i in range(S.dim):
        si = S.e(i)
        for j in range(Q.dim):
            c, s = to_c(Q.e(j)), to_s(Q.e(j))
            v = np.concatenate([action.apply(phi(si), c), S.mult(si, s)]) % p
            t[i, j] = la.coordinates(v, rows, p)
    return PullbackMiddle(Q, to_c, to_s, AlgebraAction(S, Q, la.frozen(t)), rows)


def coordinates_in(middle: PullbackMiddle, c, s) -> np.ndarray:
    p = middle.algebra.prime
    return la.coordinates(np.concatenate([np.asarray(c), np.asarray(s)]) % p, middle.rows, p)


class XModPullback(NamedTuple):
    result: CrossedModule
    projection: AlgebraMorphism
    factorize: Callable[[AlgebraMorphism, AlgebraMorphism], AlgebraMorphism]


def pullback_xmod(phi: AlgebraMorphism, X: PreCrossedModule) -> XModPullback:
    """Pullback crossed module ``phi^*(C) = C x_R S -> S``.

    ``factorize(f, mu)`` takes a morphism ``(f, phi): (B, S, mu) -> X`` given by
    its top map ``f: B -> C`` and boundary ``mu: B -> S`` and returns
    ``f^*(b) = (f(b), mu(b))``.
    """
    if not phi.target.same_as(X.R):
        raise ShapeMismatch("phi must land in the base of the crossed module")
    mid = pullback_middle(phi, X.bdry, X.action)
    res = CrossedModule(mid.algebra, phi.source, mid.to_s, mid.action)

    def factorize(f: AlgebraMorphism, mu: AlgebraMorphism) -> AlgebraMorphism:
        if not (f.target.same_as(X.C) and mu.target.same_as(phi.source) and f.source.same_as(mu.source)):
            raise ShapeMismatch("factorize needs f: B -> C and mu: B -> S")
        B = f.source
        cols = [coordinates_in(mid, f(B.e(j)), mu(B.e(j))) for j in range(B.dim)]
        m = np.array(cols, dtype=np.int64).T.reshape(mid.algebra.dim, B.dim)
        return _morphism(B, mid.algebra, m)

    return XModPullback(res, mid.to_c, factorize)


# ----------------------------------------------------------------------------
# structural facts


def image_is_ideal(X: PreCrossedModule) -> bool:
    img = kernel_image(X.bdry).image
    return all(la.in_span(X.R.mult(row, X.R.e(i)), img, X.R.prime) for row in img for i in range(X.R.dim))


def boundary_acts_trivially_on_kernel(X: PreCrossedModule) -> Report:
    """For ``k`` in ``Ker d``: ``d(c) . k = c k`` and both vanish."""
    rep = Report("image of boundary on kernel")
    ker = kernel_image(X.bdry).kernel.span
    for a, k in enumerate(ker):
        for j in range(X.C.dim):
            cj = X.C.e(j)
            acted = X.action.apply(X.bdry(cj), k)
            rep.expect("peiffer_on_kernel", (j, a), acted, X.C.mult(cj, k))
            rep.expect("trivial_on_kernel", (j, a), acted, X.C.zero())
    return rep
