"""Acceptance criteria, one test each.

Each test records a ``criterion N: PASS|FAIL ...`` line; the lines are printed
at the end of the pytest run (see ``conftest.py``) and also when this file is
run directly with ``python3 tests/test_acceptance.py``.
"""

import time

import numpy as np
import pytest

from crossmod import catalog
from crossmod.catcheck import (
    TestFamily,
    check_adjunction_g1,
    check_adjunction_pullback_induced,
    check_cartesian,
    check_cocartesian,
    check_induced_naturality,
    check_pullback_naturality,
    enum_2x_morphisms,
)
from crossmod.constructions import induced_2xmod_epi, nonmono_witness, pullback_2xmod
from crossmod.x2mod import (
    check_2morphism,
    check_2xmod,
    functor_alpha,
    functor_beta,
    functor_sk,
    sk_obstruction,
    trivial_lifting_report,
)
from crossmod.xmod import functor_delta, functor_gamma

import oracles

RESULTS: dict[int, str] = {}

CAT = catalog.x2mod_catalog(2)
MONOS = catalog.monos(2)
EPIS = catalog.epis(2)


def _over(P):
    return [e.obj for e in CAT if e.obj.P.same_as(P)]


def record(n: int, ok: bool, detail: str, started: float) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail} ({time.perf_counter() - started:.1f}s)"
    RESULTS[n] = line
    print(line)


def _mat(m):
    return np.array(m, dtype=np.int64)


def _compose(h, f, X, Y, Z, p=2):
    """``h o f`` for oracle tuples ``f: X -> Y`` and ``h: Y -> Z``."""
    out = []
    for a, b, (x, y, z) in zip(h, f, [(X.L, Y.L, Z.L), (X.M, Y.M, Z.M), (X.P, Y.P, Z.P)]):
        prod = _mat(a).reshape(z.dim, y.dim) @ _mat(b).reshape(y.dim, x.dim) % p
        out.append(oracles._t(prod.tolist()))
    return tuple(out)


def _key(f):
    return (oracles._t(f.f2.matrix.tolist()), oracles._t(f.f1.matrix.tolist()), oracles._t(f.f0.matrix.tolist()))


# ----------------------------------------------------------------------------


SK_PL4_REASON = (
    "Sk(C, R, d) violates PL4 for 4 of the 10 extra cases over F_3; the identity "
    "{m, d2 l} + {d2 l, m} = d1(m) . l leaves a residue 2(m l - d(m) . l) that only "
    "vanishes in characteristic 2 (see the decisions ledger)"
)


@pytest.mark.xfail(reason=SK_PL4_REASON, strict=True)
def test_criterion_1_sk_axiom_soundness():
    t = time.perf_counter()
    cases = list(catalog.precrossed_catalog(2)) + list(catalog.extra_precrossed())
    failing, mismatch = [], []
    for e in cases:
        X = functor_sk(e.obj)
        rep = check_2xmod(X)
        broken = {v.axiom for v in rep.violations}
        # exhaustive basis instances, evaluated independently
        if broken != oracles.x2mod_violations(X):
            mismatch.append(e.name)
        if broken:
            failing.append((e.name, tuple(sorted(broken))))
        # the closed-form obstruction predicts every failure exactly
        assert sk_obstruction(e.obj).ok == rep.ok, e.name
    assert not mismatch, mismatch
    assert all(b == ("PL4",) and e.obj.C.prime != 2 for n, b in failing for e in cases if e.name == n)
    names = ", ".join(n for n, _ in failing)
    record(1, not failing, f"{len(cases) - len(failing)}/{len(cases)} Sk outputs valid; PL4 fails for {names}", t)
    assert time.perf_counter() - t < 10
    assert not failing


def test_criterion_2_pullback_correctness():
    t = time.perf_counter()
    n = 0
    for e in MONOS:
        phi = e.obj
        S, R = phi.source, phi.target
        for span in catalog.ideals(R):
            res = pullback_2xmod(phi, catalog.ideal_inclusion_2xmod(R, span))
            Y = res.result
            assert res.report.ok and Y.L.dim == 0 and Y.P.same_as(S)
            d1 = Y.d1.matrix.tolist()
            m = phi.matrix.tolist()
            ideal = oracles.subspace(span, 2, R.dim)
            pre = {v for v in oracles.vectors(2, S.dim) if oracles.apply_matrix(m, v, 2) in ideal}
            img = [oracles.apply_matrix(d1, v, 2) for v in oracles.vectors(2, Y.M.dim)]
            # d1* is a bijection onto phi^-1(I) ...
            assert len(set(img)) == len(img) and set(img) == pre
            # ... that carries the structure constants of Y.M to those of S
            for a in oracles.basis(Y.M.dim):
                for b in oracles.basis(Y.M.dim):
                    lhs = oracles.apply_matrix(d1, oracles.mult(Y.M, a, b), 2)
                    rhs = oracles.mult(S, oracles.apply_matrix(d1, a, 2), oracles.apply_matrix(d1, b, 2))
                    assert lhs == rhs
            if not span.shape[0]:
                assert Y.M.dim == 0
            n += 1
    record(2, True, f"{n} (mono, ideal) pairs match phi^-1(I) exactly", t)


def test_criterion_3_nonmono_obstruction():
    t = time.perf_counter()
    n = 0
    for e in EPIS:
        phi = e.obj
        if len(oracles.kernel(phi)) == 1:
            continue
        for X in _over(phi.target):
            w = nonmono_witness(phi, X)
            s = tuple(w.s.tolist())
            assert any(s) and s in oracles.kernel(phi)
            # (d2 c2, s) lies in C1 x_R S and d1* projects it to s
            c1 = oracles.apply_matrix(X.d2.matrix.tolist(), tuple(w.c2.tolist()), 2)
            assert oracles.apply_matrix(X.d1.matrix.tolist(), c1, 2) == oracles.apply_matrix(phi.matrix.tolist(), s, 2)
            assert tuple(w.value.tolist()) == s
            n += 1
    assert n > 0
    record(3, True, f"{n} (epi, X) pairs give d1* d2* (c2, s) = s != 0", t)


def test_criterion_4_induced_correctness():
    t = time.perf_counter()
    objs = facts = 0
    for e in EPIS:
        phi = e.obj
        for D in _over(phi.source):
            res = induced_2xmod_epi(phi, D)
            Y = res.result
            assert check_2xmod(Y).ok and not oracles.x2mod_violations(Y)
            c = res.canonical
            assert check_2morphism(c, D, Y).ok
            assert oracles.is_2morphism(c.f2.matrix.tolist(), c.f1.matrix.tolist(), c.f0.matrix.tolist(), D, Y)
            objs += 1
            can = _key(c)
            for B in _over(phi.target)[:5]:
                vertical = oracles.two_homs(Y, B, base=np.eye(B.P.dim, dtype=np.int64).tolist())
                for f in enum_2x_morphisms(D, B, phi):
                    g = _key(res.factorize(f))
                    sols = [h for h in vertical if _compose(h, can, D, Y, B) == _key(f)]
                    assert sols == [g]
                    facts += 1
    record(4, True, f"{objs} induced objects valid; {facts} factorizations unique by brute force", t)


def test_criterion_5_base_change_adjunction():
    t = time.perf_counter()
    n = 0
    for e in MONOS + EPIS:
        phi = e.obj
        for D in _over(phi.source)[:3]:
            for B in _over(phi.target)[:3]:
                rep = check_adjunction_pullback_induced(phi, D, B, strict=True)
                assert rep.ok
                assert rep.checked["hom_phi.size"] == len(oracles.two_homs(D, B, base=phi.matrix.tolist()))
                n += 1
    assert n >= 20
    record(5, True, f"{n} triples (phi, D, B) in verified bijection", t)


def test_criterion_6_g1_adjunction():
    t = time.perf_counter()
    n = 0
    algs = list(catalog.small_algebras(2).values())
    for X in [e.obj for e in CAT[::25]]:
        for R in algs:
            assert check_adjunction_g1(X, R, strict=True).ok
            count = len(oracles.homs(functor_delta(functor_beta(X)), R))
            assert len(oracles.two_homs(X, functor_alpha(functor_gamma(R)))) == count
            n += 1
    assert n >= 10
    record(6, True, f"{n} pairs (X, R) in verified bijection", t)


def test_criterion_7_fibration_and_cofibration():
    t = time.perf_counter()
    family = TestFamily(tuple(e.obj for e in CAT), tuple(e.name for e in CAT))
    cart = cocart = 0
    for e in MONOS[::2]:
        phi = e.obj
        for X in _over(phi.target)[:2]:
            res = pullback_2xmod(phi, X)
            assert check_cartesian(res.canonical, res.result, X, family).ok, e.name
            cart += 1
    for e in EPIS:
        phi = e.obj
        for D in _over(phi.source):
            res = induced_2xmod_epi(phi, D)
            assert check_cocartesian(res.canonical, D, res.result, family).ok, e.name
            cocart += 1
    elapsed = time.perf_counter() - t
    record(7, elapsed < 60, f"{cart} cartesian and {cocart} cocartesian checks against all {len(family)} members", t)
    assert elapsed < 60


def test_criterion_8_trivial_lifting_remarks():
    t = time.perf_counter()
    n = 0
    for e in CAT:
        X = e.obj
        if X.lift.is_zero():
            assert trivial_lifting_report(X).ok, e.name
            d1 = X.d1.matrix.tolist()
            for m in oracles.basis(X.M.dim):
                for m2 in oracles.basis(X.M.dim):  # (ii) Peiffer identity
                    assert oracles.act(X.actPM, oracles.apply_matrix(d1, m, 2), m2) == oracles.mult(X.M, m, m2)
                for l in oracles.basis(X.L.dim):  # (iv)
                    assert not any(oracles.act(X.actPL, oracles.apply_matrix(d1, m, 2), l))
            for a in oracles.basis(X.L.dim):  # (iii)
                for b in oracles.basis(X.L.dim):
                    assert not any(oracles.mult(X.L, a, b))
            n += 1
    assert n > 0
    record(8, True, f"{n} zero-lifting catalog members have (M, P, d1) crossed, L^2 = 0 and d1(M) . L = 0", t)


def _composable(entries):
    return [(a.obj, b.obj) for a in entries for b in entries if a.obj.target.same_as(b.obj.source)]


def test_criterion_9_naturality():
    t = time.perf_counter()
    monos = [(a, b) for a, b in _composable(MONOS) if a.source.dim and _over(b.target)][::4]
    epis = [(a, b) for a, b in _composable(EPIS) if b.target.dim and _over(a.source)][::4]
    for phi, phi_p in monos:
        for X in _over(phi_p.target)[:2]:
            assert check_pullback_naturality(phi, phi_p, X).ok
    for phi, phi_p in epis:
        for D in _over(phi.source)[:2]:
            assert check_induced_naturality(phi, phi_p, D).ok
    assert len(monos) >= 5 and len(epis) >= 5
    record(9, True, f"{len(monos)} mono pairs and {len(epis)} epi pairs with compatible vertical isomorphisms", t)


def test_criterion_10_cli_roundtrip(tmp_path, fixtures_dir):
    import test_cli

    t = time.perf_counter()
    test_cli.test_golden_fixtures_regenerate_identically(tmp_path / "gold", fixtures_dir)
    test_cli.test_valid_fixtures_reload_byte_identically(fixtures_dir)
    (tmp_path / "emit").mkdir()
    test_cli.test_emitted_files_reload_byte_identically(tmp_path / "emit", fixtures_dir)
    rows = test_cli._matrix(fixtures_dir)
    bad = [argv for argv, code in rows if test_cli.cli(*argv)[0] != code]
    codes = sorted({code for _, code in rows})
    record(10, not bad, f"fixtures round-trip; {len(rows) - len(bad)}/{len(rows)} exit-code cases match {codes}", t)
    assert not bad, bad


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
