"""A catalog of small algebras, crossed modules and 2-crossed modules.

Over ``F_2`` every commutative associative algebra of dimension at most 2 is
listed once up to isomorphism (the list is checked against a brute-force
orbit enumeration in the tests).  A handful of ``F_3`` and dimension-3 cases
are added by hand.  Pre-crossed modules are enumerated exhaustively over the
listed algebras and reduced modulo ``Aut(C) x Aut(R)``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import linalg as la
from .algebra import (
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
    _algebra,
    _morphism,
    find_unit,
    first_nonassociative,
    kernel_image,
    mk_algebra,
    zero_algebra,
    zero_morphism,
)
from .search import enum_actions, enum_multiplicative
from .x2mod import PeifferLifting, TwoCrossedModule, check_2xmod, functor_alpha, functor_sk
from .xmod import CrossedModule, PreCrossedModule, as_crossed, check_crossed, ideal_pair


def _table(p: int, dim: int, products: dict) -> np.ndarray:
    mul = np.zeros((dim, dim, dim), dtype=np.int64)
    for (i, j), v in products.items():
        mul[i, j] = mul[j, i] = v
    return mul % p


def _named(p: int, names, products, unit=None) -> FiniteAlgebra:
    names = list(names)
    mul = _table(p, len(names), products)
    if unit is None:
        unit = find_unit(mul, p)
    return mk_algebra(p, len(names), mul, names, unit=unit)


@lru_cache(maxsize=None)
def small_algebras(p: int = 2) -> dict[str, FiniteAlgebra]:
    """Named algebras of dimension at most 2 (a complete list when ``p == 2``)."""
    out = {
        "Z": zero_algebra(p),
        f"F{p}": _named(p, ["e"], {(0, 0): [1]}),
        "N1": _named(p, ["n"], {}),
        f"F{p}xF{p}": _named(p, ["e1", "e2"], {(0, 0): [1, 0], (1, 1): [0, 1]}),
        "A": _named(p, ["1", "x"], {(0, 0): [1, 0], (0, 1): [0, 1]}),
        f"F{p}+N1": _named(p, ["e", "n"], {(0, 0): [1, 0]}),
        "N2": _named(p, ["n1", "n2"], {}),
        "T": _named(p, ["x", "y"], {(0, 0): [0, 1]}),
    }
    if p == 2:
        out["F4"] = _named(p, ["1", "w"], {(0, 0): [1, 0], (0, 1): [0, 1], (1, 1): [1, 1]})
    elif p == 3:
        out["F9"] = _named(p, ["1", "i"], {(0, 0): [1, 0], (0, 1): [0, 1], (1, 1): [2, 0]})
    return out


@lru_cache(maxsize=None)
def dim3_algebras(p: int = 2) -> dict[str, FiniteAlgebra]:
    """Selected algebras of dimension 3."""
    return {
        "A3": _named(p, ["1", "x", "x2"], {(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (0, 2): [0, 0, 1], (1, 1): [0, 0, 1]}),
        "FxA": _named(p, ["e", "1a", "x"], {(0, 0): [1, 0, 0], (1, 1): [0, 1, 0], (1, 2): [0, 0, 1]}),
        "Dual2": _named(p, ["1", "x", "y"], {(0, 0): [1, 0, 0], (0, 1): [0, 1, 0], (0, 2): [0, 0, 1]}),
    }


def algebra(name: str, p: int = 2) -> FiniteAlgebra:
    table = {**small_algebras(p), **dim3_algebras(p)}
    return table[name]


# ----------------------------------------------------------------------------
# brute-force isomorphism classes (the oracle for the hand-written list)


def _general_linear(p: int, d: int):
    for flat in itertools.product(range(p), repeat=d * d):
        g = np.array(flat, dtype=np.int64).reshape(d, d)
        if la.rank(g, p) == d:
            yield g


def _inverse(g: np.ndarray, p: int) -> np.ndarray:
    d = g.shape[0]
    cols = [la.solve(g, np.eye(d, dtype=np.int64)[k], p) for k in range(d)]
    return np.array(cols, dtype=np.int64).T.reshape(d, d)


def transport_mul(mul: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    """Structure constants in the basis ``y_i = sum_k g[k, i] x_k``."""
    return np.einsum("ai,bj,abk,mk->ijm", g, g, mul, _inverse(g, p)) % p


def canonical_form(mul: np.ndarray, p: int) -> tuple:
    d = mul.shape[0]
    if d == 0:
        return ()
    return min(tuple(transport_mul(mul, g, p).reshape(-1).tolist()) for g in _general_linear(p, d))


def brute_force_classes(p: int, d: int) -> set[tuple]:
    """Canonical forms of all commutative associative structures of dimension ``d``."""
    pairs = [(i, j) for i in range(d) for j in range(i, d)]
    found = set()
    for flat in itertools.product(range(p), repeat=d * len(pairs)):
        mul = np.zeros((d, d, d), dtype=np.int64)
        for n, (i, j) in enumerate(pairs):
            mul[i, j] = mul[j, i] = flat[n * d : (n + 1) * d]
        if first_nonassociative(mul, p) is None:
            found.add(canonical_form(mul, p))
    return found


# ----------------------------------------------------------------------------
# automorphisms and pre-crossed modules


@lru_cache(maxsize=None)
def _automorphisms_cached(key: tuple, d: int, p: int) -> tuple:
    mul = np.array(key, dtype=np.int64).reshape(d, d, d)
    a = _algebra(p, mul, detect_unit=True)
    mats = enum_multiplicative(a, a)
    return tuple(m for m in mats if la.rank(m, p) == d)


def automorphisms(a: FiniteAlgebra) -> list[np.ndarray]:
    return list(_automorphisms_cached(tuple(a.mul.reshape(-1).tolist()), a.dim, a.prime))


def _precrossed_key(B: np.ndarray, t: np.ndarray) -> tuple:
    return tuple(B.reshape(-1).tolist()) + tuple(t.reshape(-1).tolist())


def _canonical_precrossed(B, t, autC, autR, p) -> tuple:
    best = None
    for g in autC:
        gi = _inverse(g, p) if g.size else g
        for h in autR:
            hi = _inverse(h, p) if h.size else h
            B2 = h @ B @ gi % p
            t2 = np.einsum("ai,bj,abk,mk->ijm", hi, gi, t, g) % p
            key = _precrossed_key(B2, t2)
            if best is None or key < best:
                best = key
    return best


class Entry(NamedTuple):
    name: str
    obj: object


def precrossed_modules(C: FiniteAlgebra, R: FiniteAlgebra) -> list[PreCrossedModule]:
    """All pre-crossed structures on ``C -> R`` up to ``Aut(C) x Aut(R)``."""
    p = C.prime
    autC = automorphisms(C) or [np.eye(C.dim, dtype=np.int64)]
    autR = automorphisms(R) or [np.eye(R.dim, dtype=np.int64)]
    seen = set()
    out = []
    for B in enum_multiplicative(C, R):
        for t in enum_actions(R, C, B):
            key = _canonical_precrossed(B, t, autC, autR, p)
            if key in seen:
                continue
            seen.add(key)
            X = PreCrossedModule(C, R, _morphism(C, R, B), AlgebraAction(R, C, la.frozen(t)))
            out.append(as_crossed(X) if check_crossed(X).ok else X)
    return out


@lru_cache(maxsize=None)
def precrossed_catalog(p: int = 2, max_dim: int = 2) -> tuple[Entry, ...]:
    algs = [(n, a) for n, a in small_algebras(p).items() if a.dim <= max_dim]
    out = []
    for (nc, C), (nr, R) in itertools.product(algs, algs):
        for k, X in enumerate(precrossed_modules(C, R)):
            out.append(Entry(f"{nc}->{nr}#{k}", X))
    return tuple(out)


@lru_cache(maxsize=None)
def extra_precrossed() -> tuple[Entry, ...]:
    """Ten hand-picked cases over ``F_3`` and in dimension 3."""
    f3 = small_algebras(3)
    f2_3 = dim3_algebras(2)
    f3_3 = dim3_algebras(3)
    picks = [
        ("F3:A->A", f3["A"], f3["A"]),
        ("F3:A->F3", f3["A"], f3["F3"]),
        ("F3:F3xF3->F3", f3["F3xF3"], f3["F3"]),
        ("F3:F9->F9", f3["F9"], f3["F9"]),
        ("F3:N2->A", f3["N2"], f3["A"]),
        ("F3:T->F3", f3["T"], f3["F3"]),
        ("F2:A3->A", f2_3["A3"], small_algebras(2)["A"]),
        ("F2:FxA->F2", f2_3["FxA"], small_algebras(2)["F2"]),
        ("F2:Dual2->A", f2_3["Dual2"], small_algebras(2)["A"]),
        ("F3:A3->F3", f3_3["A3"], f3["F3"]),
    ]
    out = []
    for name, C, R in picks:
        mods = precrossed_modules(C, R)
        # prefer a strictly pre-crossed structure, the interesting case for Sk
        strict = [X for X in mods if not isinstance(X, CrossedModule)]
        out.append(Entry(name, (strict or mods)[-1]))
    return tuple(out)


def crossed_catalog(p: int = 2, max_dim: int = 2) -> list[Entry]:
    return [e for e in precrossed_catalog(p, max_dim) if isinstance(e.obj, CrossedModule)]


# ----------------------------------------------------------------------------
# morphisms between catalog algebras


def unit_compatible(f: AlgebraMorphism) -> bool:
    """Both ends unital with ``f(1) = 1``, or neither end unital.

    Base changes along other maps can break the unit axiom of the transported
    actions (a non-unital mono, or an epi from a non-unital algebra).
    """
    s, t = f.source, f.target
    if s.unit is None or t.unit is None:
        return s.unit is None and t.unit is None
    return np.array_equal(f(s.unit), t.unit)


@lru_cache(maxsize=None)
def base_maps(p: int = 2, max_dim: int = 2) -> tuple[Entry, ...]:
    """Unit-compatible morphisms between catalog algebras, named ``S->R#k``."""
    algs = [(n, a) for n, a in small_algebras(p).items() if a.dim <= max_dim]
    out = []
    for (ns, S), (nr, R) in itertools.product(algs, algs):
        for k, m in enumerate(enum_multiplicative(S, R)):
            f = _morphism(S, R, m)
            if unit_compatible(f):
                out.append(Entry(f"{ns}->{nr}#{k}", f))
    return tuple(out)


def monos(p: int = 2, max_dim: int = 2) -> list[Entry]:
    return [e for e in base_maps(p, max_dim) if kernel_image(e.obj).is_mono]


def epis(p: int = 2, max_dim: int = 2) -> list[Entry]:
    return [e for e in base_maps(p, max_dim) if kernel_image(e.obj).is_epi]


# ----------------------------------------------------------------------------
# 2-crossed modules


def ideals(a: FiniteAlgebra) -> list[np.ndarray]:
    """All ideals of ``a`` as echelon spans (by subspace enumeration)."""
    p, d = a.prime, a.dim
    found = {}
    for k in range(d + 1):
        for combo in itertools.combinations(list(la.all_vectors(p, d)), k):
            s = la.span(np.array(combo, dtype=np.int64).reshape(k, d), p, d)
            if s.shape[0] != k:
                continue
            closed = all(la.in_span(a.mult(row, a.e(i)), s, p) for row in s for i in range(d))
            if closed:
                found.setdefault(s.tobytes() + bytes([s.shape[0]]), s)
    return sorted(found.values(), key=lambda s: (s.shape[0], s.tobytes()))


def ideal_inclusion_2xmod(a: FiniteAlgebra, span: np.ndarray) -> TwoCrossedModule:
    from .algebra import mk_ideal

    return functor_alpha(ideal_pair(a, mk_ideal(a, span)))


def zero_lifting_modules(M: CrossedModule, L: FiniteAlgebra) -> list[TwoCrossedModule]:
    """All valid 2-crossed modules ``L -> M -> P`` with zero lifting over a crossed ``M``."""
    out = []
    P = M.R
    zero_lift = PeifferLifting(M.C, L, la.frozen(np.zeros((M.C.dim, M.C.dim, L.dim), np.int64)))
    for D2 in enum_multiplicative(L, M.C):
        if np.any(M.bdry.matrix @ D2 % L.prime):
            continue
        for t in enum_actions(P, L, None):
            X = TwoCrossedModule(L, M.C, P, _morphism(L, M.C, D2), M.bdry,
                                 AlgebraAction(P, L, la.frozen(t)), M.action, zero_lift)
            if check_2xmod(X).ok:
                out.append(X)
    return out


def module_2xmod(Y: FiniteAlgebra, S: FiniteAlgebra, action: AlgebraAction) -> TwoCrossedModule:
    """``{Y, Y, S, id, 0}`` with lifting ``{y, y'} = y y'``."""
    from .algebra import identity

    return TwoCrossedModule(Y, Y, S, identity(Y), zero_morphism(Y, S), action, action,
                            PeifferLifting(Y, Y, Y.mul))


@lru_cache(maxsize=None)
def x2mod_catalog(p: int = 2) -> tuple[Entry, ...]:
    """A deterministic family of valid 2-crossed modules over ``F_p`` (dimensions <= 2).

    Candidates failing :func:`check_2xmod` are dropped; outside characteristic
    2 this removes the ``Sk`` outputs that violate PL4.
    """
    algs = small_algebras(p)
    out: list[Entry] = []
    keys = set()

    def add(name, X):
        key = _x2key(X)
        if key not in keys and check_2xmod(X).ok:
            keys.add(key)
            out.append(Entry(name, X))

    for e in precrossed_catalog(p):
        if isinstance(e.obj, CrossedModule):
            add(f"alpha({e.name})", functor_alpha(e.obj))
        else:
            add(f"sk({e.name})", functor_sk(e.obj))
    for name, a in algs.items():
        for k, s in enumerate(ideals(a)):
            add(f"ideal({name}#{k})", ideal_inclusion_2xmod(a, s))
    for e in crossed_catalog(p):
        if e.obj.C.dim <= 1 and e.obj.R.dim <= 2:
            for n, X in enumerate(zero_lifting_modules(e.obj, algs["N1"])):
                add(f"zl({e.name};N1#{n})", X)
    for name, S in algs.items():
        for Yn in ("N1", "N2"):
            Y = algs[Yn]
            for n, t in enumerate(enum_actions(S, Y)):
                act = AlgebraAction(S, Y, la.frozen(t))
                add(f"mod({Yn}/{name}#{n})", module_2xmod(Y, S, act))
    return tuple(out)


def _x2key(X: TwoCrossedModule) -> tuple:
    parts = [X.L.mul, X.M.mul, X.P.mul, X.d2.matrix, X.d1.matrix, X.actPL.act, X.actPM.act, X.lift.lift]
    return tuple((a.shape, a.tobytes()) for a in parts)


def x2mods_over(P: FiniteAlgebra, p: int = 2) -> list[Entry]:
    return [e for e in x2mod_catalog(p) if e.obj.P.same_as(P)]
