"""Hom-set enumeration and verification of universal properties on finite families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import linalg as la
from .algebra import AlgebraAction, AlgebraMorphism, FiniteAlgebra, _morphism, identity, zero_morphism
from .constructions import induced_2xmod_epi, pullback_2xmod
from .errors import BijectionFailure, EndpointMismatch, NoIsomorphismFound
from .report import Report
from .search import (
    LinearSystem,
    action_compat,
    bilinear_compat,
    enum_multiplicative,
    left_known,
    multiplicative_solutions,
)
from .x2mod import TwoCrossedModule, TwoCrossedMorphism, check_2xmod, functor_alpha, functor_beta
from .xmod import functor_delta, functor_gamma


@dataclass(frozen=True, eq=False)
class HomSet:
    source: object
    target: object
    elements: tuple
    base: AlgebraMorphism | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def keys(self) -> set:
        return {f.key() for f in self.elements}

    def find(self, f) -> int | None:
        k = f.key()
        for i, g in enumerate(self.elements):
            if g.key() == k:
                return i
        return None


@dataclass(frozen=True, eq=False)
class TestFamily:
    """A finite stand-in for "every 2-crossed module"; members are validated on construction."""

    __test__ = False  # not a pytest class

    members: tuple
    names: tuple = field(default=())

    def __post_init__(self):
        for i, Z in enumerate(self.members):
            rep = check_2xmod(Z)
            if not rep.ok:
                raise ValueError(f"family member {i} is not a 2-crossed module: {rep.violations[0]}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"Z{i}" for i in range(len(self.members))))

    def over(self, base: FiniteAlgebra) -> list[tuple[str, TwoCrossedModule]]:
        return [(n, Z) for n, Z in zip(self.names, self.members) if Z.P.same_as(base)]

    def __iter__(self):
        return iter(zip(self.names, self.members))

    def __len__(self) -> int:
        return len(self.members)


# ----------------------------------------------------------------------------
# enumeration


def enum_alg_morphisms(A: FiniteAlgebra, B: FiniteAlgebra, limit: int | None = None) -> HomSet:
    """Every multiplicative linear map ``A -> B``."""
    mats = enum_multiplicative(A, B, limit)
    return HomSet(A, B, tuple(_morphism(A, B, m) for m in mats))


def _middle_maps(X: TwoCrossedModule, Y: TwoCrossedModule, F0: np.ndarray, limit) -> np.ndarray:
    r, c = Y.M.dim, X.M.dim
    sys = LinearSystem(r * c, X.prime)
    sys.add(left_known(Y.d1.matrix, r, c), F0 @ X.d1.matrix)
    sys.add(action_compat(X.actPM.act, F0, Y.actPM.act, r, c))
    return multiplicative_solutions(X.M, Y.M, sys, limit)


def _top_maps(X: TwoCrossedModule, Y: TwoCrossedModule, F1: np.ndarray, F0: np.ndarray, limit) -> np.ndarray:
    p = X.prime
    r, c = Y.L.dim, X.L.dim
    sys = LinearSystem(r * c, p)
    sys.add(left_known(Y.d2.matrix, r, c), F1 @ X.d2.matrix)
    sys.add(action_compat(X.actPL.act, F0, Y.actPL.act, r, c))
    sys.add(bilinear_compat(X.lift.lift, r, c), np.einsum("ai,bj,abm->ijm", F1, F1, Y.lift.lift))
    return multiplicative_solutions(X.L, Y.L, sys, limit)


def enum_2x_morphisms(
    X: TwoCrossedModule,
    Y: TwoCrossedModule,
    base: AlgebraMorphism | None = None,
    limit: int | None = None,
    middle: AlgebraMorphism | None = None,
) -> HomSet:
    """Every 2-crossed morphism ``X -> Y``, optionally with ``f0`` (and ``f1``) fixed.

    Level by level: ``f0`` from the multiplicative maps of the bases, then
    ``f1`` and ``f2`` as the multiplicative points of the affine spaces cut out
    by the (linear) square, action and lifting conditions.
    """
    if base is not None and not (base.source.same_as(X.P) and base.target.same_as(Y.P)):
        raise EndpointMismatch("base morphism does not go between the bases")
    bases = [base.matrix] if base is not None else list(enum_multiplicative(X.P, Y.P, limit))
    out = []
    for F0 in bases:
        f0 = base if base is not None else _morphism(X.P, Y.P, F0)
        if middle is not None:
            mids = [middle.matrix] if _middle_ok(X, Y, middle.matrix, F0) else []
        else:
            mids = _middle_maps(X, Y, F0, limit)
        for F1 in mids:
            f1 = _morphism(X.M, Y.M, F1)
            for F2 in _top_maps(X, Y, F1, F0, limit):
                out.append(TwoCrossedMorphism(_morphism(X.L, Y.L, F2), f1, f0))
    return HomSet(X, Y, tuple(out), base)


def _middle_ok(X, Y, F1, F0) -> bool:
    cands = _middle_maps(X, Y, F0, None)
    return any(np.array_equal(F1 % X.prime, m) for m in cands)


# ----------------------------------------------------------------------------
# adjunctions


def _check_inverse_pair(rep: Report, tag: str, left: HomSet, right: HomSet, fwd, bwd) -> None:
    """``fwd: left -> right`` and ``bwd: right -> left`` are mutually inverse bijections."""
    rep.expect(f"{tag}.count", (), len(left), len(right))
    rkeys, lkeys = right.keys(), left.keys()
    for i, f in enumerate(left):
        g = fwd(f)
        rep.require(f"{tag}.forward_lands", g.key() in rkeys, (i,))
        rep.require(f"{tag}.unit", bwd(g).key() == f.key(), (i,))
    for j, g in enumerate(right):
        f = bwd(g)
        rep.require(f"{tag}.backward_lands", f.key() in lkeys, (j,))
        rep.require(f"{tag}.counit", fwd(f).key() == g.key(), (j,))


def _strict(rep: Report, strict: bool) -> Report:
    if strict and not rep.ok:
        raise BijectionFailure(str(rep.violations[0]))
    return rep


def check_adjunction_pullback_induced(
    phi: AlgebraMorphism,
    D: TwoCrossedModule,
    B: TwoCrossedModule,
    limit: int | None = None,
    strict: bool = False,
) -> Report:
    """Hom-set bijections around base change along ``phi: S -> R`` (``D`` over ``S``, ``B`` over ``R``).

    Pullback side (``phi`` mono): ``Hom_/S(D, phi^* B) ~ Hom_phi(D, B)`` via
    ``f -> (f2, (f1, d1), id)`` and ``g -> canonical o g``.
    Induced side (``phi`` epi): ``Hom_/R(phi_* D, B) ~ Hom_phi(D, B)`` via
    ``f -> (f2 o lift, f1 o lift, id)`` and ``g -> g o canonical``.
    """
    from .algebra import kernel_image

    ki = kernel_image(phi)
    rep = Report("base-change adjunction")
    over_phi = enum_2x_morphisms(D, B, phi, limit)
    rep.checked["hom_phi.size"] = len(over_phi)
    if ki.is_mono:
        pb = pullback_2xmod(phi, B)
        rep.merge(pb.report, "pullback.construction:")
        vert = enum_2x_morphisms(D, pb.result, identity(D.P), limit)
        _check_inverse_pair(
            rep, "pullback", over_phi, vert,
            lambda f: pb.factorize(f, D),
            lambda g: pb.canonical @ g,
        )
    if ki.is_epi:
        ind = induced_2xmod_epi(phi, D)
        rep.merge(ind.report, "induced.construction:")
        vert = enum_2x_morphisms(ind.result, B, identity(B.P), limit)
        _check_inverse_pair(
            rep, "induced", over_phi, vert,
            ind.factorize,
            lambda g: g @ ind.canonical,
        )
    rep.require("applicable", ki.is_mono or ki.is_epi, note="phi is neither mono nor epi")
    return _strict(rep, strict)


def check_adjunction_g1(X: TwoCrossedModule, R: FiniteAlgebra, limit: int | None = None, strict: bool = False) -> Report:
    """``k-Alg(delta beta X, R) ~ X2Mod(X, alpha gamma R)`` via ``f0 -> (0, f0 d1, f0)``."""
    rep = Report("delta-beta / alpha-gamma adjunction")
    base = functor_delta(functor_beta(X))
    target = functor_alpha(functor_gamma(R))
    algs = enum_alg_morphisms(base, R, limit)
    twos = enum_2x_morphisms(X, target, None, limit)
    p = X.prime

    def fwd(f0: AlgebraMorphism) -> TwoCrossedMorphism:
        f1 = _morphism(X.M, R, f0.matrix @ X.d1.matrix % p)
        return TwoCrossedMorphism(zero_morphism(X.L, target.L), f1, f0)

    def bwd(f: TwoCrossedMorphism) -> AlgebraMorphism:
        return f.f0

    _check_inverse_pair(rep, "g1", algs, twos, fwd, bwd)
    return _strict(rep, strict)


# ----------------------------------------------------------------------------
# cartesian and cocartesian morphisms


def check_cartesian(
    f: TwoCrossedMorphism,
    Y: TwoCrossedModule,
    X: TwoCrossedModule,
    family: TestFamily,
    limit: int | None = None,
) -> Report:
    """``f: Y -> X`` over ``u`` is cartesian relative to ``family``.

    For each ``Z``, each ``v: base(Z) -> base(Y)`` and each ``theta: Z -> X``
    over ``u v`` there must be exactly one ``psi: Z -> Y`` over ``v`` with
    ``f psi = theta``.
    """
    rep = Report("cartesian morphism")
    u = f.f0
    for zname, Z in family:
        for vi, v in enumerate(enum_alg_morphisms(Z.P, Y.P, limit)):
            lifts = Counter((f @ psi).key() for psi in enum_2x_morphisms(Z, Y, v, limit))
            for ti, theta in enumerate(enum_2x_morphisms(Z, X, u @ v, limit)):
                n = lifts.get(theta.key(), 0)
                rep.require("cartesian.exists", n >= 1, (zname, vi, ti))
                rep.require("cartesian.unique", n <= 1, (zname, vi, ti), note=f"{n} lifts" if n > 1 else "")
    return rep


def check_cocartesian(
    f: TwoCrossedMorphism,
    Z: TwoCrossedModule,
    Y: TwoCrossedModule,
    family: TestFamily,
    limit: int | None = None,
) -> Report:
    """``f: Z -> Y`` over ``v`` is cocartesian relative to ``family`` (vertical tests only).

    For each ``X'`` over ``base(Y)`` and each ``theta': Z -> X'`` over ``v``
    there must be exactly one vertical ``psi': Y -> X'`` with ``psi' f = theta'``.
    """
    rep = Report("cocartesian morphism")
    v = f.f0
    for xname, Xp in family.over(Y.P):
        ext = Counter((psi @ f).key() for psi in enum_2x_morphisms(Y, Xp, identity(Y.P), limit))
        for ti, theta in enumerate(enum_2x_morphisms(Z, Xp, v, limit)):
            n = ext.get(theta.key(), 0)
            rep.require("cocartesian.exists", n >= 1, (xname, ti))
            rep.require("cocartesian.unique", n <= 1, (xname, ti), note=f"{n} extensions" if n > 1 else "")
    return rep


# ----------------------------------------------------------------------------
# freeness


def _same_lower(X: TwoCrossedModule, Xp: TwoCrossedModule) -> bool:
    return (
        X.M.same_as(Xp.M) and X.P.same_as(Xp.P) and X.d1.same_as(Xp.d1) and X.actPM.same_as(Xp.actPM)
    )


def _basis_maps(X, Xp, theta, source, phi, limit):
    """Candidate ``theta': Y -> C2'`` with ``d2' theta' = d2 theta``, as matrices."""
    p = X.prime
    target = X.d2.matrix @ theta % p
    if source is None:
        r, c = Xp.L.dim, theta.shape[1]
        sys = LinearSystem(r * c, p)
        sys.add(left_known(Xp.d2.matrix, r, c), target)
        space = sys.solution_space()
        if space is None:
            return []
        from .search import affine_points

        part, basis = space
        pts = [m.reshape(r, c) for chunk in affine_points(part, la.as_rows(basis, r * c), p, limit) for m in chunk]
        return pts
    mid = _morphism(source.M, Xp.M, target)
    return [g.f2.matrix for g in enum_2x_morphisms(source, Xp, phi, limit, middle=mid)]


def check_free_2xmod(
    X: TwoCrossedModule,
    theta,
    targets: TestFamily | Sequence[TwoCrossedModule],
    source: TwoCrossedModule | None = None,
    phi: AlgebraMorphism | None = None,
    limit: int | None = None,
) -> Report:
    """Freeness of ``X`` on ``theta: Y -> C2`` (columns of ``theta`` are the images).

    ``free.definition``: for each admissible ``theta'`` there is exactly one
    vertical ``(Phi, id, id)`` (so ``d2' Phi = d2``).
    ``free.basis``: exactly one of them also satisfies ``Phi theta = theta'``.
    With ``source = {Y, Y, S, id, 0}`` and ``phi``, ``theta'`` ranges over the
    top components of 2-crossed morphisms ``(theta', d2 theta, phi)``;
    otherwise over all functions on the basis ``Y``.
    """
    p = X.prime
    theta = la.as_matrix(theta, p)
    if theta.ndim != 2:
        theta = theta.reshape(X.L.dim, -1) if X.L.dim else np.zeros((0, 0), np.int64)
    members = targets.members if isinstance(targets, TestFamily) else tuple(targets)
    rep = Report("free 2-crossed module")
    for ti, Xp in enumerate(members):
        if not _same_lower(X, Xp):
            rep.require("free.shared_base", False, (ti,), note="target does not share (C1, C0, d1)")
            continue
        verticals = enum_2x_morphisms(X, Xp, identity(X.P), limit, middle=identity(X.M))
        for k, tp in enumerate(_basis_maps(X, Xp, theta, source, phi, limit)):
            n_all = len(verticals)
            n_basis = sum(np.array_equal(g.f2.matrix @ theta % p, tp % p) for g in verticals)
            rep.require("free.definition", n_all == 1, (ti, k), note=f"{n_all} morphisms")
            rep.require("free.basis", n_basis == 1, (ti, k), note=f"{n_basis} morphisms")
    return rep


def check_free_module(C2: FiniteAlgebra, act: AlgebraAction, basis_images) -> Report:
    """``C2`` is a free ``C1``-module on ``basis_images`` (``act`` is ``C1`` acting on ``C2``)."""
    C1 = act.actor
    p = C2.prime
    imgs = [np.asarray(v, dtype=np.int64) % p for v in basis_images]
    rep = Report("free module")
    rep.expect("free.dimension", (), C2.dim, len(imgs) * C1.dim)
    cols = [act.apply(C1.e(i), y) for y in imgs for i in range(C1.dim)]
    m = la.as_rows(cols, C2.dim).T if cols else np.zeros((C2.dim, 0), np.int64)
    rep.expect("free.bijective", (), la.rank(m, p), C2.dim)
    return rep


# ----------------------------------------------------------------------------
# isomorphisms and naturality


def vertical_isomorphisms(A: TwoCrossedModule, B: TwoCrossedModule, limit: int | None = None) -> list[TwoCrossedMorphism]:
    if not A.P.same_as(B.P) or A.dims() != B.dims():
        return []
    return [f for f in enum_2x_morphisms(A, B, identity(A.P), limit) if f.is_iso()]


def find_vertical_isomorphism(A: TwoCrossedModule, B: TwoCrossedModule, limit: int | None = None) -> TwoCrossedMorphism:
    isos = vertical_isomorphisms(A, B, limit)
    if not isos:
        raise NoIsomorphismFound("no vertical isomorphism between the two 2-crossed modules")
    return isos[0]


def check_pullback_naturality(phi: AlgebraMorphism, phi_prime: AlgebraMorphism, X: TwoCrossedModule,
                              limit: int | None = None) -> Report:
    """``phi^* phi'^* X ~ (phi' phi)^* X`` for monos ``phi: S -> R``, ``phi': R -> T``.

    Some vertical isomorphism ``psi`` must also satisfy
    ``can(phi' phi) o psi = can(phi') o can(phi)``.
    """
    rep = Report("pullback naturality")
    inner = pullback_2xmod(phi_prime, X)
    two_step = pullback_2xmod(phi, inner.result)
    one_step = pullback_2xmod(phi_prime @ phi, X)
    isos = vertical_isomorphisms(two_step.result, one_step.result, limit)
    rep.require("naturality.iso", bool(isos), note="no vertical isomorphism")
    composite = (inner.canonical @ two_step.canonical).key()
    ok = any((one_step.canonical @ psi).key() == composite for psi in isos)
    rep.require("naturality.compatible", ok, note="no isomorphism commutes with the canonical maps")
    return rep


def check_induced_naturality(phi: AlgebraMorphism, phi_prime: AlgebraMorphism, D: TwoCrossedModule,
                             limit: int | None = None) -> Report:
    """``phi'_* phi_* D ~ (phi' phi)_* D`` for epis ``phi: S -> R``, ``phi': R -> T``.

    Some vertical isomorphism ``psi: (phi' phi)_* D -> phi'_* phi_* D`` must
    satisfy ``psi o can(phi' phi) = can(phi') o can(phi)``.
    """
    rep = Report("induced naturality")
    inner = induced_2xmod_epi(phi, D)
    two_step = induced_2xmod_epi(phi_prime, inner.result)
    one_step = induced_2xmod_epi(phi_prime @ phi, D)
    isos = vertical_isomorphisms(one_step.result, two_step.result, limit)
    rep.require("naturality.iso", bool(isos), note="no vertical isomorphism")
    composite = (two_step.canonical @ inner.canonical).key()
    ok = any((psi @ one_step.canonical).key() == composite for psi in isos)
    rep.require("naturality.compatible", ok, note="no isomorphism commutes with the canonical maps")
    return rep
