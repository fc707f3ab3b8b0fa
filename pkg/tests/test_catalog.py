import itertools

import numpy as np
import pytest

from crossmod import catalog
from crossmod.algebra import _morphism, check_algebra, kernel_image
from crossmod.x2mod import check_2xmod
from crossmod.xmod import CrossedModule, check_precrossed

import oracles


@pytest.mark.parametrize("p,d", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_hand_list_matches_brute_force_classes(p, d):
    listed = {catalog.canonical_form(a.mul, p) for a in catalog.small_algebras(p).values() if a.dim == d}
    assert listed == catalog.brute_force_classes(p, d)


def test_class_counts():
    assert len(catalog.brute_force_classes(2, 1)) == 2
    assert len(catalog.brute_force_classes(2, 2)) == 6


def test_dim3_picks_are_valid():
    for p in (2, 3):
        for a in catalog.dim3_algebras(p).values():
            assert check_algebra(a).ok


def test_precrossed_catalog_size():
    cat = catalog.precrossed_catalog(2)
    assert len(cat) == 161
    assert sum(isinstance(e.obj, CrossedModule) for e in cat) == 63
    assert len({e.name for e in cat}) == len(cat)


@pytest.mark.parametrize("c,r", [("A", "A"), ("F2xF2", "F2"), ("T", "A"), ("N1", "F2+N1"), ("F4", "F4"), ("N2", "F2")])
def test_precrossed_enumeration_against_oracle(c, r):
    C, R = catalog.algebra(c), catalog.algebra(r)
    brute = oracles.precrossed_structures(C, R)
    ours = catalog.precrossed_modules(C, R)
    assert len(ours) == oracles.count_up_to_iso(C, R, brute)
    keys = {(oracles._t(X.bdry.matrix.tolist()),
             tuple(tuple(tuple(row) for row in ti) for ti in X.action.act.tolist())) for X in ours}
    assert keys <= set(brute)


def test_every_catalog_entry_is_precrossed():
    for e in catalog.precrossed_catalog(2) + catalog.extra_precrossed():
        assert check_precrossed(e.obj).ok


def test_extra_picks():
    extra = catalog.extra_precrossed()
    assert len(extra) == 10
    assert sum(e.obj.C.prime == 3 for e in extra) == 7
    assert sum(e.obj.C.dim == 3 for e in extra) >= 3


def test_base_maps_are_unit_compatible_and_complete():
    algs = catalog.small_algebras(2)
    got = {e.name.split("#")[0] for e in catalog.base_maps(2)}
    count = 0
    for (ns, S), (nr, R) in itertools.product(algs.items(), algs.items()):
        for m in oracles.homs(S, R):
            f = _morphism(S, R, np.array(m, dtype=np.int64).reshape(R.dim, S.dim))
            if catalog.unit_compatible(f):
                count += 1
                assert f"{ns}->{nr}" in got
    assert count == len(catalog.base_maps(2))
    assert len(catalog.monos(2)) == 29 and len(catalog.epis(2)) == 29
    for e in catalog.monos(2):
        assert kernel_image(e.obj).is_mono


def test_x2mod_catalog_all_valid():
    cat = catalog.x2mod_catalog(2)
    assert len(cat) == 251
    for e in cat:
        assert check_2xmod(e.obj).ok
        assert oracles.x2mod_violations(e.obj) == set()
    kinds = {e.name.split("(")[0] for e in cat}
    assert kinds == {"alpha", "sk", "ideal", "zl", "mod"}


def test_ideals_against_oracle():
    for a in catalog.small_algebras(2).values():
        found = {frozenset(oracles.subspace(s, 2, a.dim)) for s in catalog.ideals(a)}
        brute = set()
        for rows in itertools.product(oracles.vectors(2, a.dim), repeat=a.dim):
            sp = oracles.subspace(rows, 2, a.dim)
            if oracles.ideal_closure(a, list(sp)) == sp:
                brute.add(frozenset(sp))
        assert found == brute
