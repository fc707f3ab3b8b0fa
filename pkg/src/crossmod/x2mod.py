"""2-crossed modules ``L -> M -> P`` with a Peiffer lifting ``{-,-}: M x M -> L``.

Axioms verified by :func:`check_2xmod` (``.`` is the ``P``-action):

* PL1  ``d2{m0, m1} = m0 m1 - d1(m1) . m0``
* PL2  ``{d2 l0, d2 l1} = l0 l1``
* PL3  ``{m0, m1 m2} = {m0 m1, m2} + d1(m2) . {m0, m1}``
* PL4  ``{m, d2 l} + {d2 l, m} = d1(m) . l``
* PL5  ``p . {m0, m1} = {p . m0, m1} = {m0, p . m1}``
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg as la
from .algebra import (
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
    _morphism,
    check_action,
    identity,
    kernel_image,
    mk_ideal,
    quotient_by_ideal,
    subalgebra,
    zero_action,
    zero_algebra,
    zero_morphism,
    is_multiplicative,
)
from .errors import ActionNotRestrictable, NotAnIdeal, ShapeMismatch
from .report import Report
from .xmod import CrossedModule, PreCrossedModule, check_crossed, peiffer_ideal


@dataclass(frozen=True, eq=False)
class PeifferLifting:
    M: FiniteAlgebra
    L: FiniteAlgebra
    lift: np.ndarray

    def __call__(self, m0, m1) -> np.ndarray:
        return np.einsum("i,j,ijk->k", np.asarray(m0), np.asarray(m1), self.lift) % self.M.prime

    def is_zero(self) -> bool:
        return not np.any(self.lift)


@dataclass(frozen=True, eq=False)
class TwoCrossedModule:
    L: FiniteAlgebra
    M: FiniteAlgebra
    P: FiniteAlgebra
    d2: AlgebraMorphism
    d1: AlgebraMorphism
    actPL: AlgebraAction
    actPM: AlgebraAction
    lift: PeifferLifting

    def __post_init__(self):
        ok = (
            self.d2.source.same_as(self.L)
            and self.d2.target.same_as(self.M)
            and self.d1.source.same_as(self.M)
            and self.d1.target.same_as(self.P)
            and self.actPL.actor.same_as(self.P)
            and self.actPL.acted.same_as(self.L)
            and self.actPM.actor.same_as(self.P)
            and self.actPM.acted.same_as(self.M)
            and self.lift.M.same_as(self.M)
            and self.lift.L.same_as(self.L)
        )
        if not ok:
            raise ShapeMismatch("2-crossed module components do not fit together")

    @property
    def prime(self) -> int:
        return self.P.prime

    def bracket(self, m0, m1) -> np.ndarray:
        return self.lift(m0, m1)

    def dims(self) -> tuple[int, int, int]:
        return (self.L.dim, self.M.dim, self.P.dim)

    def same_as(self, other: "TwoCrossedModule") -> bool:
        return (
            self.d2.same_as(other.d2)
            and self.d1.same_as(other.d1)
            and self.actPL.same_as(other.actPL)
            and self.actPM.same_as(other.actPM)
            and np.array_equal(self.lift.lift, other.lift.lift)
        )

    def __repr__(self) -> str:
        return "TwoCrossedModule(L dim {}, M dim {}, P dim {})".format(*self.dims())


@dataclass(frozen=True, eq=False)
class TwoCrossedMorphism:
    f2: AlgebraMorphism
    f1: AlgebraMorphism
    f0: AlgebraMorphism

    def key(self) -> tuple:
        return (self.f2.key(), self.f1.key(), self.f0.key())

    def __matmul__(self, other: "TwoCrossedMorphism") -> "TwoCrossedMorphism":
        return TwoCrossedMorphism(self.f2 @ other.f2, self.f1 @ other.f1, self.f0 @ other.f0)

    def same_as(self, other: "TwoCrossedMorphism") -> bool:
        return self.f2.same_as(other.f2) and self.f1.same_as(other.f1) and self.f0.same_as(other.f0)

    def is_iso(self) -> bool:
        return all(
            f.source.dim == f.target.dim and la.rank(f.matrix, f.source.prime) == f.source.dim
            for f in (self.f2, self.f1, self.f0)
        )


def identity_2morphism(X: TwoCrossedModule) -> TwoCrossedMorphism:
    return TwoCrossedMorphism(identity(X.L), identity(X.M), identity(X.P))


# ----------------------------------------------------------------------------
# axiom checks


def check_2xmod(X: TwoCrossedModule) -> Report:
    p = X.prime
    c, cL, cP = X.M.mul, X.L.mul, X.P.mul
    b = X.lift.lift
    D2, D1 = X.d2.matrix, X.d1.matrix
    aL, aM = X.actPL.act, X.actPM.act
    rep = Report("2-crossed module")
    rep.merge(check_action(X.actPL), "P.L:")
    rep.merge(check_action(X.actPM), "P.M:")
    rep.expect_all("complex", (D1 @ D2 % p).T, np.zeros((X.L.dim, X.P.dim), np.int64))
    rep.expect_all(
        "equivariance.d2",
        np.einsum("ijk,mk->ijm", aL, D2) % p,
        np.einsum("kj,ikm->ijm", D2, aM) % p,
    )
    rep.expect_all(
        "equivariance.d1",
        np.einsum("ijk,mk->ijm", aM, D1) % p,
        np.einsum("kj,ikm->ijm", D1, cP) % p,
    )
    rep.expect_all(
        "PL1",
        np.einsum("ijl,ml->ijm", b, D2) % p,
        (c - np.einsum("kj,kim->ijm", D1, aM)) % p,
    )
    rep.expect_all(
        "PL2",
        np.einsum("ia,jb,ijm->abm", D2, D2, b) % p,
        cL % p,
    )
    rep.expect_all(
        "PL3",
        np.einsum("jkl,ilm->ijkm", c, b) % p,
        (np.einsum("ijl,lkm->ijkm", c, b) + np.einsum("qk,ijr,qrm->ijkm", D1, b, aL)) % p,
    )
    rep.expect_all(
        "PL4",
        (np.einsum("ja,ijm->iam", D2, b) + np.einsum("ja,jim->iam", D2, b)) % p,
        np.einsum("qi,qam->iam", D1, aL) % p,
    )
    outer = np.einsum("ijr,qrm->ijqm", b, aL) % p
    rep.expect_all("PL5.left", outer, np.einsum("qis,sjm->ijqm", aM, b) % p)
    rep.expect_all("PL5.right", outer, np.einsum("qjs,ism->ijqm", aM, b) % p)
    return rep


def check_2morphism(f: TwoCrossedMorphism, X: TwoCrossedModule, Y: TwoCrossedModule) -> Report:
    rep = Report("2-crossed module morphism")
    ends = (
        f.f2.source.same_as(X.L) and f.f2.target.same_as(Y.L)
        and f.f1.source.same_as(X.M) and f.f1.target.same_as(Y.M)
        and f.f0.source.same_as(X.P) and f.f0.target.same_as(Y.P)
    )
    rep.require("endpoints", ends)
    if not ends:
        return rep
    for name, g in (("f2", f.f2), ("f1", f.f1), ("f0", f.f0)):
        rep.require(f"multiplicative.{name}", is_multiplicative(g))
    p = X.prime
    F2, F1, F0 = f.f2.matrix, f.f1.matrix, f.f0.matrix
    rep.expect_all("square.d1", (Y.d1.matrix @ F1 % p).T, (F0 @ X.d1.matrix % p).T)
    rep.expect_all("square.d2", (Y.d2.matrix @ F2 % p).T, (F1 @ X.d2.matrix % p).T)
    rep.expect_all(
        "action.M",
        np.einsum("mk,ijk->ijm", F1, X.actPM.act) % p,
        np.einsum("ai,bj,abm->ijm", F0, F1, Y.actPM.act) % p,
    )
    rep.expect_all(
        "action.L",
        np.einsum("mk,ijk->ijm", F2, X.actPL.act) % p,
        np.einsum("ai,bj,abm->ijm", F0, F2, Y.actPL.act) % p,
    )
    rep.expect_all(
        "lifting",
        np.einsum("mk,ijk->ijm", F2, X.lift.lift) % p,
        np.einsum("ai,bj,abm->ijm", F1, F1, Y.lift.lift) % p,
    )
    return rep


# ----------------------------------------------------------------------------
# derived structure


class DerivedAction(NamedTuple):
    action: AlgebraAction
    xmod: CrossedModule
    report: Report


def _drop(rep: Report, axiom: str) -> Report:
    out = Report(rep.subject)
    out.checked = {k: n for k, n in rep.checked.items() if k != axiom}
    out.failures = {k: n for k, n in rep.failures.items() if k != axiom}
    out.violations = [v for v in rep.violations if v.axiom != axiom]
    return out


def derived_action(X: TwoCrossedModule) -> DerivedAction:
    """``m . l = {m, d2 l}``, making ``(L, M, d2)`` a crossed module.

    The report covers the action axioms (except unitality), the crossed-module
    axioms and the second half of the split PL4: ``{d2 l, m} = m . l - d1(m) . l``.
    """
    p = X.prime
    b, D2, D1 = X.lift.lift, X.d2.matrix, X.d1.matrix
    t = np.einsum("kj,ikm->ijm", D2, b) % p
    act = AlgebraAction(X.M, X.L, la.frozen(t))
    xm = CrossedModule(X.L, X.M, X.d2, act)
    full = check_crossed(xm)
    # M need not act unitally on L: with a zero lifting the derived action is
    # zero, whatever unit M carries
    rep = Report("derived crossed module")
    rep.merge(_drop(full, "action.unit"))
    rep.expect_all(
        "PL4.split",
        np.einsum("ka,kim->iam", D2, b) % p,
        (t - np.einsum("qi,qam->iam", D1, X.actPL.act)) % p,
    )
    return DerivedAction(act, xm, rep)


def trivial_lifting_report(X: TwoCrossedModule) -> Report:
    """The consequences of a zero Peiffer lifting.

    (i) equivariance, (ii) ``(M, P, d1)`` crossed, (iii) ``L`` has zero
    multiplication, (iv) ``d1(M)`` acts trivially on ``L``.
    """
    if not X.lift.is_zero():
        raise ValueError("trivial_lifting_report needs a zero Peiffer lifting")
    p = X.prime
    rep = Report("trivial Peiffer lifting")
    full = check_2xmod(X)
    equivariant = not (full.failed("equivariance.d2") or full.failed("equivariance.d1"))
    rep.require("zero_lift.equivariant", equivariant, note="boundaries are P-equivariant")
    tr = check_crossed(functor_tr(X))
    rep.merge(tr, "zero_lift.crossed:")
    rep.require("zero_lift.crossed", tr.ok, note="(M, P, d1) is crossed")
    rep.expect_all("zero_lift.square_zero", X.L.mul % p, np.zeros_like(X.L.mul))
    rep.expect_all(
        "zero_lift.annihilated",
        np.einsum("qi,qam->iam", X.d1.matrix, X.actPL.act) % p,
        np.zeros((X.M.dim, X.L.dim, X.L.dim), np.int64),
    )
    return rep


# ----------------------------------------------------------------------------
# functors


def functor_tr(X: TwoCrossedModule) -> PreCrossedModule:
    return PreCrossedModule(X.M, X.P, X.d1, X.actPM)


def functor_alpha(X: PreCrossedModule) -> TwoCrossedModule:
    """``{0, M, P, 0, d}``."""
    Z = zero_algebra(X.C.prime)
    return TwoCrossedModule(
        Z,
        X.C,
        X.R,
        zero_morphism(Z, X.C),
        X.bdry,
        zero_action(X.R, Z),
        X.action,
        PeifferLifting(X.C, Z, la.frozen(np.zeros((X.C.dim, X.C.dim, 0), np.int64))),
    )


def functor_sk(X: PreCrossedModule) -> TwoCrossedModule:
    """``{<M,M>, M, P, incl, d}`` with lifting ``{m0, m1} = m0 m1 - d(m1) . m0``.

    The inclusion ``d2`` is injective, so PL1 pins the lifting down; it is the
    negated Peiffer commutator with swapped arguments and generates the same
    Peiffer ideal.  Outside characteristic 2 the result can violate PL4; see
    :func:`sk_obstruction`.
    """
    M, P = X.C, X.R
    p = M.prime
    ideal = peiffer_ideal(X)
    L, inc = subalgebra(M, ideal.span, detect_unit=False)
    span = ideal.span
    t = np.zeros((P.dim, L.dim, L.dim), dtype=np.int64)
    for i in range(P.dim):
        for j in range(L.dim):
            v = X.action.apply(P.e(i), span[j])
            if not la.in_span(v, span, p):
                raise ActionNotRestrictable(f"p{i} . l{j} leaves the Peiffer ideal")
            t[i, j] = la.coordinates(v, span, p)
    b = np.zeros((M.dim, M.dim, L.dim), dtype=np.int64)
    for i in range(M.dim):
        for j in range(M.dim):
            b[i, j] = la.coordinates((-X.peiffer_commutator(M.e(j), M.e(i))) % p, span, p)
    return TwoCrossedModule(
        L, M, P, inc, X.bdry, AlgebraAction(P, L, la.frozen(t)), X.action,
        PeifferLifting(M, L, la.frozen(b)),
    )


def sk_obstruction(X: PreCrossedModule) -> Report:
    """PL4 for ``Sk(X)`` in closed form.

    Lifting and ``P``-action of ``Sk(X)`` are forced (``d2`` is injective), and
    ``d(l) = 0`` on the Peiffer ideal, so PL4 reduces to
    ``2 (m l - d(m) . l) = 0`` for ``m`` in ``M`` and ``l`` in ``<M,M>``.  This
    always holds in characteristic 2 and can fail otherwise.
    """
    p = X.C.prime
    rep = Report("Sk PL4 obstruction")
    span = peiffer_ideal(X).span
    for i in range(X.C.dim):
        m = X.C.e(i)
        for a, l in enumerate(span):
            defect = 2 * (X.C.mult(m, l) - X.action.apply(X.bdry(m), l)) % p
            rep.expect("sk.PL4", (i, a), defect, X.C.zero())
    return rep


def functor_beta(X: TwoCrossedModule) -> CrossedModule:
    """``(M / Im d2, P, induced d1)`` on the deterministic quotient basis."""
    p = X.prime
    img = kernel_image(X.d2).image
    try:
        ideal = mk_ideal(X.M, img)
    except NotAnIdeal as exc:
        raise NotAnIdeal(f"Im d2 is not an ideal of M: {exc}") from exc
    Q, proj, lift = quotient_by_ideal(X.M, ideal)
    d1 = _morphism(Q, X.P, X.d1.matrix @ lift % p)
    t = np.zeros((X.P.dim, Q.dim, Q.dim), dtype=np.int64)
    for i in range(X.P.dim):
        for j in range(Q.dim):
            t[i, j] = proj(X.actPM.apply(X.P.e(i), lift[:, j]))
    return CrossedModule(Q, X.P, d1, AlgebraAction(X.P, Q, la.frozen(t)))


def sk_tr_counit(Y: TwoCrossedModule) -> tuple[TwoCrossedModule, TwoCrossedMorphism | None]:
    """The comparison ``Sk(Tr(Y)) -> Y`` with middle and base components the identity.

    On ``<M,M>`` it sends ``{m, m'}_Sk`` to ``{m, m'}_Y``.  The brackets of basis
    pairs span ``<M,M>`` linearly (``m l = {m, l}`` for ``l`` in the ideal), so
    the top map is forced; None is returned when that assignment is inconsistent.
    """
    sk = functor_sk(functor_tr(Y))
    p = Y.prime
    n = Y.M.dim
    g = sk.lift.lift.reshape(n * n, sk.L.dim).T
    t = Y.lift.lift.reshape(n * n, Y.L.dim).T
    m = np.zeros((Y.L.dim, sk.L.dim), dtype=np.int64)
    for k in range(sk.L.dim):
        x = la.solve(g, sk.L.e(k), p)
        if x is None:
            return sk, None
        m[:, k] = t @ x % p
    if not np.array_equal(m @ g % p, t % p):
        return sk, None
    return sk, TwoCrossedMorphism(_morphism(sk.L, Y.L, m), identity(Y.M), identity(Y.P))
