import numpy as np
import pytest

from crossmod import algebra as alg
from crossmod import catalog
from crossmod.catcheck import (
    TestFamily,
    check_adjunction_g1,
    check_adjunction_pullback_induced,
    check_cartesian,
    check_cocartesian,
    check_free_2xmod,
    check_free_module,
    check_induced_naturality,
    check_pullback_naturality,
    enum_2x_morphisms,
    enum_alg_morphisms,
    find_vertical_isomorphism,
    vertical_isomorphisms,
)
from crossmod.constructions import induced_2xmod_epi, pullback_2xmod
from crossmod.errors import BijectionFailure, EndpointMismatch, NoIsomorphismFound
from crossmod.x2mod import (
    PeifferLifting,
    TwoCrossedModule,
    TwoCrossedMorphism,
    check_2xmod,
    functor_alpha,
    functor_beta,
    identity_2morphism,
)
from crossmod.xmod import check_xmod_morphism, functor_delta, functor_gamma, ideal_pair

import oracles

CAT = catalog.x2mod_catalog(2)
BY_NAME = {e.name: e.obj for e in CAT}
MONOS = catalog.monos(2)
EPIS = catalog.epis(2)
FAMILY = TestFamily(tuple(e.obj for e in CAT), tuple(e.name for e in CAT))


def _over(P):
    return [e.obj for e in CAT if e.obj.P.same_as(P)]


def _keys(homset):
    return {(oracles._t(f.f2.matrix.tolist()), oracles._t(f.f1.matrix.tolist()), oracles._t(f.f0.matrix.tolist()))
            for f in homset}


@pytest.fixture(scope="module")
def D_ideal(A, x_ideal):
    return functor_alpha(ideal_pair(A, x_ideal))


@pytest.fixture(scope="module")
def pt(F2):
    """{0, 0, F2}."""
    X = BY_NAME["alpha(Z->F2#0)"]
    assert X.dims() == (0, 0, 1) and X.P.same_as(F2)
    return X


# ----------------------------------------------------------------------------
# enumeration


def test_alg_morphisms_small_examples(F2, A):
    assert len(enum_alg_morphisms(F2, F2)) == 2
    assert sorted(f.matrix.tolist() for f in enum_alg_morphisms(A, F2)) == [[[0, 0]], [[1, 0]]]
    Z = alg.zero_algebra(2)
    for B in (Z, F2, A):
        assert len(enum_alg_morphisms(Z, B)) == 1


def test_two_morphisms_of_the_point(pt):
    homs = enum_2x_morphisms(pt, pt)
    assert sorted(f.f0.matrix.tolist() for f in homs) == [[[0]], [[1]]]
    assert all(f.f1.matrix.size == 0 and f.f2.matrix.size == 0 for f in homs)


SMALL = [e for e in CAT if sum(e.obj.dims()) <= 3]


@pytest.mark.parametrize("i", range(0, len(SMALL), 3))
def test_enum_2x_morphisms_matches_brute_force(i):
    X = SMALL[i].obj
    for Y in [e.obj for e in SMALL[i % 7::9]]:
        assert _keys(enum_2x_morphisms(X, Y)) == oracles.two_homs(X, Y)


def test_enum_with_fixed_base_matches_brute_force():
    n = 0
    for X in [e.obj for e in SMALL[::4]]:
        for Y in [e.obj for e in SMALL[1::5]]:
            for f0 in enum_alg_morphisms(X.P, Y.P):
                got = _keys(enum_2x_morphisms(X, Y, f0))
                assert got == oracles.two_homs(X, Y, base=f0.matrix.tolist())
                n += 1
    assert n > 40


def test_identity_is_enumerated():
    for X in [e.obj for e in CAT[::7]]:
        homs = enum_2x_morphisms(X, X, alg.identity(X.P))
        assert homs.find(identity_2morphism(X)) is not None


def test_enum_rejects_wrong_base(pt, A):
    with pytest.raises(EndpointMismatch):
        enum_2x_morphisms(pt, pt, alg.identity(A))


def test_alpha_morphisms_are_crossed_module_endomorphisms():
    for e in catalog.crossed_catalog(2)[::3]:
        Xc = e.obj
        X = functor_alpha(Xc)
        brute = 0
        for th in oracles.homs(Xc.C, Xc.C):
            for ph in oracles.homs(Xc.R, Xc.R):
                t = alg._morphism(Xc.C, Xc.C, np.array(th, dtype=np.int64).reshape(Xc.C.dim, Xc.C.dim))
                f = alg._morphism(Xc.R, Xc.R, np.array(ph, dtype=np.int64).reshape(Xc.R.dim, Xc.R.dim))
                brute += check_xmod_morphism(t, f, Xc, Xc).ok
        assert len(enum_2x_morphisms(X, X)) == brute, e.name


def test_homset_elements_are_distinct():
    for X in [e.obj for e in CAT[::11]]:
        homs = enum_2x_morphisms(X, X)
        assert len(homs.keys()) == len(homs)


# ----------------------------------------------------------------------------
# adjunctions


def test_adjunction_identity_base():
    for X in [e.obj for e in CAT[::9]]:
        for Y in _over(X.P)[:3]:
            rep = check_adjunction_pullback_induced(alg.identity(X.P), X, Y)
            assert rep.ok
            assert rep.checked["hom_phi.size"] == len(enum_2x_morphisms(X, Y, alg.identity(X.P)))


def test_adjunction_along_unit(u, pt, D_ideal):
    rep = check_adjunction_pullback_induced(u, pt, D_ideal)
    assert rep.ok
    assert rep.checked["hom_phi.size"] == len(oracles.two_homs(pt, D_ideal, base=u.matrix.tolist()))


def test_adjunction_along_projection(pi, D_ideal, F2):
    for B in _over(F2):
        rep = check_adjunction_pullback_induced(pi, D_ideal, B)
        assert rep.ok
        assert rep.checked["hom_phi.size"] == len(oracles.two_homs(D_ideal, B, base=pi.matrix.tolist()))


def test_adjunction_over_catalog_triples():
    triples = 0
    for e in MONOS + EPIS:
        phi = e.obj
        for D in _over(phi.source)[:3]:
            for B in _over(phi.target)[:3]:
                assert check_adjunction_pullback_induced(phi, D, B, strict=True).ok
                triples += 1
    assert triples >= 20


def test_adjunction_not_applicable(A):
    zero = alg.zero_morphism(A, A)
    X = functor_alpha(functor_gamma(A))
    rep = check_adjunction_pullback_induced(zero, X, X)
    assert [v.axiom for v in rep.violations] == ["applicable"]
    with pytest.raises(BijectionFailure):
        check_adjunction_pullback_induced(zero, X, X, strict=True)


def test_g1_examples(pt, F2, D_ideal):
    assert check_adjunction_g1(pt, F2).ok
    assert len(enum_2x_morphisms(pt, functor_alpha(functor_gamma(F2)))) == 2
    Z = alg.zero_algebra(2)
    assert check_adjunction_g1(pt, Z).ok
    assert len(enum_2x_morphisms(pt, functor_alpha(functor_gamma(Z)))) == 1
    assert check_adjunction_g1(D_ideal, F2).ok


def test_g1_counts_match_brute_force():
    algs = catalog.small_algebras(2)
    pairs = 0
    for X in [e.obj for e in CAT[::13]]:
        for R in algs.values():
            assert check_adjunction_g1(X, R, strict=True).ok
            base = functor_delta(functor_beta(X))
            n = len(oracles.homs(base, R))
            assert len(oracles.two_homs(X, functor_alpha(functor_gamma(R)))) == n
            pairs += 1
    assert pairs >= 10


# ----------------------------------------------------------------------------
# cartesian / cocartesian


def test_canonical_pullback_is_cartesian(u, D_ideal, F2, A):
    res = pullback_2xmod(u, D_ideal)
    small = TestFamily(tuple(_over(F2)[:6] + _over(A)[:4]))
    assert check_cartesian(res.canonical, res.result, D_ideal, small).ok


def test_identity_is_cartesian_and_cocartesian():
    for X in [e.obj for e in CAT[::17]]:
        fam = TestFamily(tuple(_over(X.P)[:4]) + (X,))
        assert check_cartesian(identity_2morphism(X), X, X, fam).ok
        assert check_cocartesian(identity_2morphism(X), X, X, fam).ok


def test_degraded_pullback_is_not_cartesian(A):
    X = functor_alpha(functor_gamma(A))  # {0, A, A}
    Y = functor_alpha(functor_gamma(A))
    Y = TwoCrossedModule(Y.L, alg.zero_algebra(2), A, alg.zero_morphism(Y.L, alg.zero_algebra(2)),
                         alg.zero_morphism(alg.zero_algebra(2), A), Y.actPL,
                         alg.zero_action(A, alg.zero_algebra(2)),
                         PeifferLifting(alg.zero_algebra(2), Y.L, np.zeros((0, 0, 0), np.int64)))
    assert check_2xmod(Y).ok
    f = TwoCrossedMorphism(alg.identity(X.L), alg.zero_morphism(Y.M, X.M), alg.identity(A))
    rep = check_cartesian(f, Y, X, TestFamily((X,)))
    assert not rep.ok
    assert {v.axiom for v in rep.violations} == {"cartesian.exists"}


def test_canonical_induced_is_cocartesian(pi, D_ideal):
    res = induced_2xmod_epi(pi, D_ideal)
    assert check_cocartesian(res.canonical, D_ideal, res.result, FAMILY).ok


def test_collapsed_quotient_is_not_cocartesian(pi, D_ideal, pt):
    res = induced_2xmod_epi(pi, D_ideal)
    Y = functor_alpha(functor_gamma(pt.P))
    bad = TwoCrossedMorphism(res.canonical.f2, alg.zero_morphism(D_ideal.M, Y.M), pi)
    rep = check_cocartesian(bad, D_ideal, Y, TestFamily((res.result, Y)))
    assert {v.axiom for v in rep.violations} == {"cocartesian.exists"}


def test_quotient_with_wrong_lifting_is_not_cocartesian():
    found = 0
    for e in EPIS:
        phi = e.obj
        for D in _over(phi.source):
            res = induced_2xmod_epi(phi, D)
            Y = res.result
            if not np.any(Y.lift.lift):
                continue
            wrong = TwoCrossedModule(Y.L, Y.M, Y.P, Y.d2, Y.d1, Y.actPL, Y.actPM,
                                     PeifferLifting(Y.M, Y.L, np.zeros_like(Y.lift.lift)))
            rep = check_cocartesian(res.canonical, D, wrong, TestFamily((Y,)))
            assert not rep.ok
            found += 1
            if found >= 5:
                return
    assert found


@pytest.mark.parametrize("entry", MONOS[::4], ids=[e.name for e in MONOS[::4]])
def test_pullbacks_cartesian_against_catalog(entry):
    phi = entry.obj
    for X in _over(phi.target)[:2]:
        res = pullback_2xmod(phi, X)
        assert check_cartesian(res.canonical, res.result, X, FAMILY).ok


@pytest.mark.parametrize("entry", EPIS[::3], ids=[e.name for e in EPIS[::3]])
def test_induced_cocartesian_against_catalog(entry):
    phi = entry.obj
    for D in _over(phi.source):
        res = induced_2xmod_epi(phi, D)
        assert check_cocartesian(res.canonical, D, res.result, FAMILY).ok


def test_family_validates_members(A):
    X = functor_alpha(functor_gamma(A))
    broken = TwoCrossedModule(X.L, X.M, X.P, X.d2, alg.zero_morphism(X.M, A), X.actPL, X.actPM, X.lift)
    with pytest.raises(ValueError):
        TestFamily((X, broken))
    fam = TestFamily((X,))
    assert fam.names == ("Z0",) and len(fam) == 1 and fam.over(A) == [("Z0", X)]


# ----------------------------------------------------------------------------
# freeness


def test_free_vacuous():
    X = BY_NAME["alpha(Z->Z#0)"]
    assert X.L.dim == 0
    rep = check_free_2xmod(X, np.zeros((0, 0), np.int64), [X])
    assert rep.ok


def test_induced_module_object_is_free():
    checked = 0
    for e in EPIS:
        phi = e.obj
        for name, D in [(k, v) for k, v in BY_NAME.items() if k.startswith("mod(")]:
            if not D.P.same_as(phi.source):
                continue
            res = induced_2xmod_epi(phi, D)
            X = res.result
            fam = [X] + [Z for Z in _over(X.P) if Z.M.same_as(X.M) and Z.d1.same_as(X.d1)
                         and Z.actPM.same_as(X.actPM)]
            rep = check_free_2xmod(X, res.canonical.f2.matrix, fam, source=D, phi=phi)
            assert rep.ok, (e.name, name, rep.violations[:1])
            checked += 1
    assert checked > 50


def test_non_free_reports_definition_and_basis_separately():
    X = BY_NAME["zl(Z->F2#0;N1#0)"]  # L = N1, M = 0: both 0 and id on L qualify
    rep = check_free_2xmod(X, np.eye(1, dtype=np.int64), [X])
    axioms = {v.axiom for v in rep.violations}
    assert axioms == {"free.definition"}
    assert rep.checked["free.basis"] == 2 and "free.basis" not in axioms
    # with no basis at all, the basis condition also loses uniqueness
    rep = check_free_2xmod(X, np.zeros((1, 0), np.int64), [X])
    assert {v.axiom for v in rep.violations} == {"free.definition", "free.basis"}


def test_free_requires_shared_lower_part(A, F2):
    X = functor_alpha(functor_gamma(A))
    rep = check_free_2xmod(X, np.zeros((0, 0), np.int64), [functor_alpha(functor_gamma(F2))])
    assert [v.axiom for v in rep.violations] == ["free.shared_base"]


def test_free_module_examples(A):
    act = alg.multiplication_action(A)
    assert check_free_module(A, act, [A.unit]).ok
    AA = alg.direct_product(A, A)
    diag = alg.action_from_function(
        A, AA, lambda r, v: np.concatenate([A.mult(r, v[:2]), A.mult(r, v[2:])]))
    assert alg.check_action(diag).ok
    assert check_free_module(AA, diag, [[1, 0, 0, 0], [0, 0, 1, 0]]).ok
    assert not check_free_module(AA, diag, [[1, 0, 0, 0], [0, 1, 0, 0]]).ok
    F2 = catalog.algebra("F2")
    q = alg.action_via(alg.mk_morphism(A, F2, [[1, 0]]), alg.multiplication_action(F2))
    rep = check_free_module(F2, q, [[1]])
    assert [v.axiom for v in rep.violations] == ["free.dimension"]


# ----------------------------------------------------------------------------
# isomorphisms and naturality


def test_vertical_isomorphism_search(A, D_ideal):
    whole = functor_alpha(functor_gamma(A))
    assert vertical_isomorphisms(whole, D_ideal) == []
    with pytest.raises(NoIsomorphismFound):
        find_vertical_isomorphism(whole, D_ideal)
    assert find_vertical_isomorphism(D_ideal, D_ideal).is_iso()


def test_pullback_naturality_examples(u, A, D_ideal):
    assert check_pullback_naturality(u, alg.identity(A), D_ideal).ok
    assert check_pullback_naturality(alg.identity(u.source), u, D_ideal).ok


def test_induced_naturality_epi_chain(pi, D_ideal, F2):
    assert check_induced_naturality(pi, alg.identity(F2), D_ideal).ok
    assert check_induced_naturality(alg.identity(pi.source), pi, D_ideal).ok


def _composable(entries):
    return [(a.obj, b.obj) for a in entries for b in entries if a.obj.target.same_as(b.obj.source)]


def test_pullback_naturality_over_catalog():
    pairs = _composable(MONOS)[::3]
    for phi, phi_p in pairs:
        for X in _over(phi_p.target)[:2]:
            assert check_pullback_naturality(phi, phi_p, X).ok
    assert len(pairs) >= 5


def test_induced_naturality_over_catalog():
    pairs = _composable(EPIS)[::3]
    for phi, phi_p in pairs:
        for D in _over(phi.source)[:2]:
            assert check_induced_naturality(phi, phi_p, D).ok
    assert len(pairs) >= 5
