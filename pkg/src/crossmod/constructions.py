"""Base change of 2-crossed modules: pullback along a monomorphism, induced along an epimorphism."""

from __future__ import annotations

from typing import Callable, NamedTuple

import numpy as np

from . import linalg as la
from .algebra import (
    AlgebraAction,
    AlgebraMorphism,
    _morphism,
    action_via,
    identity,
    ideal_generated,
    kernel_image,
    quotient_by_ideal,
)
from .errors import EndpointMismatch, IsMono, NotEpi, NotMono, WellDefinednessFailure
from .report import Report
from .x2mod import (
    PeifferLifting,
    TwoCrossedModule,
    TwoCrossedMorphism,
    check_2morphism,
    check_2xmod,
)
from .xmod import coordinates_in, pullback_middle


class PullbackResult(NamedTuple):
    result: TwoCrossedModule
    canonical: TwoCrossedMorphism
    # factorize(f, B) for f = (f2, f1, phi): B -> X
    factorize: Callable[[TwoCrossedMorphism, TwoCrossedModule], TwoCrossedMorphism]
    report: Report


class InducedResult(NamedTuple):
    result: TwoCrossedModule
    canonical: TwoCrossedMorphism
    factorize: Callable[[TwoCrossedMorphism], TwoCrossedMorphism]
    report: Report


class Witness(NamedTuple):
    c2: np.ndarray
    s: np.ndarray
    value: np.ndarray


def _construction_report(subject: str, X: TwoCrossedModule, f: TwoCrossedMorphism, src, tgt) -> Report:
    rep = Report(subject)
    rep.merge(check_2xmod(X), "result:")
    rep.merge(check_2morphism(f, src, tgt), "canonical:")
    return rep


# ----------------------------------------------------------------------------
# pullback


def nonmono_witness(phi: AlgebraMorphism, X: TwoCrossedModule) -> Witness:
    """An element of the naive pullback complex ``C2 x Ker(phi) -> phi*(C1) -> S`` whose
    image under ``d1* d2*`` is nonzero.

    ``d2*(c2, s) = (d2(c2), s)`` and ``d1*(c1, s) = s``, so ``(0, s)`` for a
    nonzero ``s`` in the kernel goes to ``s``.
    """
    if not phi.target.same_as(X.P):
        raise EndpointMismatch("phi must land in the base of X")
    ker = kernel_image(phi).kernel.span
    if ker.shape[0] == 0:
        raise IsMono("phi is injective; the pullback complex is exact at the base")
    s = ker[0]
    c2 = X.L.zero()
    mid = pullback_middle(phi, X.d1, X.actPM)
    image = coordinates_in(mid, X.d2(c2), s)  # d2*(c2, s)
    value = mid.to_s(image)  # d1* of it
    return Witness(c2, s, value)


def pullback_2xmod(phi: AlgebraMorphism, X: TwoCrossedModule) -> PullbackResult:
    """``{C2, phi*(C1), S, d2*, d1*}`` for a monomorphism ``phi: S -> R``."""
    if not phi.target.same_as(X.P):
        raise EndpointMismatch("phi must land in the base of X")
    if not kernel_image(phi).is_mono:
        w = nonmono_witness(phi, X)
        raise NotMono(
            "phi is not a monomorphism, so the pullback is not a complex of S-algebras: "
            f"d1* d2* (c2={w.c2.tolist()}, s={w.s.tolist()}) = {w.value.tolist()} != 0",
            witness=w,
        )
    S = phi.source
    p = S.prime
    mid = pullback_middle(phi, X.d1, X.actPM)
    Q = mid.algebra
    cols = [coordinates_in(mid, X.d2(X.L.e(j)), S.zero()) for j in range(X.L.dim)]
    d2 = _morphism(X.L, Q, la.as_rows(cols, Q.dim).T.reshape(Q.dim, X.L.dim))
    p1 = mid.to_c.matrix
    lift = np.einsum("ia,jb,ijk->abk", p1, p1, X.lift.lift) % p
    res = TwoCrossedModule(
        X.L, Q, S, d2, mid.to_s, action_via(phi, X.actPL), mid.action,
        PeifferLifting(Q, X.L, la.frozen(lift)),
    )
    canonical = TwoCrossedMorphism(identity(X.L), mid.to_c, phi)

    def factorize(f: TwoCrossedMorphism, B: TwoCrossedModule) -> TwoCrossedMorphism:
        ends = (
            f.f0.same_as(phi) and f.f2.target.same_as(X.L) and f.f1.target.same_as(X.M)
            and f.f2.source.same_as(B.L) and f.f1.source.same_as(B.M) and B.P.same_as(S)
        )
        if not ends:
            raise EndpointMismatch("pullback factorization needs a morphism B -> X over phi")
        cols = [coordinates_in(mid, f.f1(B.M.e(j)), B.d1(B.M.e(j))) for j in range(B.M.dim)]
        f1 = _morphism(B.M, Q, la.as_rows(cols, Q.dim).T.reshape(Q.dim, B.M.dim))
        return TwoCrossedMorphism(f.f2, f1, identity(S))

    rep = _construction_report("pullback 2-crossed module", res, canonical, res, X)
    return PullbackResult(res, canonical, factorize, rep)


# ----------------------------------------------------------------------------
# induced along an epimorphism


def _kernel_ideal(K: np.ndarray, act: AlgebraAction):
    gens = [act.apply(k, act.acted.e(j)) for k in K for j in range(act.acted.dim)]
    return ideal_generated(act.acted, gens)


def _assert_inside(span: np.ndarray, vectors, what: str, p: int) -> None:
    for where, v in vectors:
        if not la.in_span(v, span, p):
            raise WellDefinednessFailure(f"{what}: {where} gives {np.asarray(v).tolist()} outside the ideal")


def induced_2xmod_epi(phi: AlgebraMorphism, D: TwoCrossedModule) -> InducedResult:
    """``{D2/KD2, D1/KD1, R, d2*, d1*}`` for an epimorphism ``phi: S -> R`` with kernel ``K``."""
    if not phi.source.same_as(D.P):
        raise EndpointMismatch("phi must start at the base of D")
    ki = kernel_image(phi)
    if not ki.is_epi:
        raise NotEpi("phi is not surjective")
    S, R = phi.source, phi.target
    p = S.prime
    K = ki.kernel.span
    KD2 = _kernel_ideal(K, D.actPL)
    KD1 = _kernel_ideal(K, D.actPM)
    s_basis = [S.e(i) for i in range(S.dim)]

    # the ideals are S-stable and compatible with the boundaries and the lifting
    _assert_inside(KD2.span, [((i, a), D.actPL.apply(s, v)) for i, s in enumerate(s_basis) for a, v in enumerate(KD2.span)], "S.KD2", p)
    _assert_inside(KD1.span, [((i, a), D.actPM.apply(s, v)) for i, s in enumerate(s_basis) for a, v in enumerate(KD1.span)], "S.KD1", p)
    _assert_inside(KD1.span, [((a,), D.d2(v)) for a, v in enumerate(KD2.span)], "d2(KD2)", p)
    for a, v in enumerate(KD1.span):
        if np.any(phi(D.d1(v))):
            raise WellDefinednessFailure(f"phi d1 does not vanish on KD1 basis vector {a}")
    brackets = []
    for a, v in enumerate(KD1.span):
        for j in range(D.M.dim):
            brackets.append(((a, j), D.lift(v, D.M.e(j))))
            brackets.append(((j, a), D.lift(D.M.e(j), v)))
    _assert_inside(KD2.span, brackets, "{KD1, D1}", p)

    Q2, q2, l2 = quotient_by_ideal(D.L, KD2)
    Q1, q1, l1 = quotient_by_ideal(D.M, KD1)
    sigma = np.array([la.solve(phi.matrix, R.e(i), p) for i in range(R.dim)], dtype=np.int64).reshape(R.dim, S.dim)

    d2 = _morphism(Q2, Q1, q1.matrix @ D.d2.matrix @ l2 % p)
    d1 = _morphism(Q1, R, phi.matrix @ D.d1.matrix @ l1 % p)
    t1 = np.zeros((R.dim, Q1.dim, Q1.dim), dtype=np.int64)
    t2 = np.zeros((R.dim, Q2.dim, Q2.dim), dtype=np.int64)
    for i in range(R.dim):
        for j in range(Q1.dim):
            t1[i, j] = q1(D.actPM.apply(sigma[i], l1[:, j]))
        for j in range(Q2.dim):
            t2[i, j] = q2(D.actPL.apply(sigma[i], l2[:, j]))
    lift = np.zeros((Q1.dim, Q1.dim, Q2.dim), dtype=np.int64)
    for a in range(Q1.dim):
        for b in range(Q1.dim):
            lift[a, b] = q2(D.lift(l1[:, a], l1[:, b]))
    res = TwoCrossedModule(
        Q2, Q1, R, d2, d1,
        AlgebraAction(R, Q2, la.frozen(t2)), AlgebraAction(R, Q1, la.frozen(t1)),
        PeifferLifting(Q1, Q2, la.frozen(lift)),
    )
    canonical = TwoCrossedMorphism(q2, q1, phi)

    def factorize(f: TwoCrossedMorphism) -> TwoCrossedMorphism:
        if not (f.f0.same_as(phi) and f.f2.source.same_as(D.L) and f.f1.source.same_as(D.M)):
            raise EndpointMismatch("induced factorization needs a morphism out of D over phi")
        for name, g, span in (("f2", f.f2, KD2.span), ("f1", f.f1, KD1.span)):
            for a, v in enumerate(span):
                if np.any(g(v)):
                    raise WellDefinednessFailure(f"{name} does not vanish on kernel ideal vector {a}")
        f2 = _morphism(Q2, f.f2.target, f.f2.matrix @ l2 % p)
        f1 = _morphism(Q1, f.f1.target, f.f1.matrix @ l1 % p)
        return TwoCrossedMorphism(f2, f1, identity(R))

    rep = _construction_report("induced 2-crossed module", res, canonical, D, res)
    return InducedResult(res, canonical, factorize, rep)


# ----------------------------------------------------------------------------
# standalone factorizers


def pullback_factorize(result: PullbackResult, f: TwoCrossedMorphism, source: TwoCrossedModule) -> TwoCrossedMorphism:
    """``f = (f2, f1, phi): B -> X`` factored through the pullback as ``(f2, f1*, id_S)``."""
    return result.factorize(f, source)


def induced_factorize(result: InducedResult, f: TwoCrossedMorphism) -> TwoCrossedMorphism:
    """``f = (f2, f1, phi): D -> B`` factored through the induced object as ``(f2*, f1*, id_R)``."""
    return result.factorize(f)
