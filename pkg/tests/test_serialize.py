import json

import numpy as np
import pytest

from crossmod import algebra as alg
from crossmod import catalog
from crossmod.errors import AlgebraInputError, NotCommutative, NotMultiplicative, NotPrime, ShapeMismatch
from crossmod.serialize import InputFormatError, Loader, dump, dumps, kind_of, load_file, to_data, triple_data
from crossmod.x2mod import identity_2morphism
from crossmod.xmod import CrossedModule, PreCrossedModule


def _roundtrip(obj, tmp_path, name="obj.json"):
    path = tmp_path / name
    text = dump(obj, path)
    kind, back = load_file(path)
    assert dumps(to_data(back)) == text
    return kind, back


@pytest.mark.parametrize("entry", catalog.x2mod_catalog(2)[::3], ids=lambda e: e.name)
def test_x2mod_roundtrip(entry, tmp_path):
    kind, back = _roundtrip(entry.obj, tmp_path)
    assert kind == "x2mod"
    assert back.lift.lift.tobytes() == entry.obj.lift.lift.tobytes()


def test_precrossed_roundtrip_keeps_crossedness(tmp_path):
    for e in catalog.precrossed_catalog(2)[::5]:
        kind, back = _roundtrip(e.obj, tmp_path)
        assert kind == "xmod"
        assert isinstance(back, CrossedModule) == isinstance(e.obj, CrossedModule)
        assert isinstance(back, PreCrossedModule)


def test_small_object_roundtrips(tmp_path, A, u, x_ideal):
    objs = [A, u, alg.multiplication_action(A), alg.zero_algebra(2), catalog.algebra("F4")]
    for i, o in enumerate(objs):
        _roundtrip(o, tmp_path, f"o{i}.json")
    X = catalog.ideal_inclusion_2xmod(A, x_ideal.span)
    path = tmp_path / "t.json"
    path.write_text(dumps(triple_data(identity_2morphism(X), X, X)))
    kind, (f, src, tgt) = load_file(path)
    assert kind == "triple" and f.same_as(identity_2morphism(X)) and src.same_as(X) and tgt.same_as(X)


def test_emission_is_canonical(A):
    text = dumps(to_data(A))
    assert text.endswith("\n") and "\n" not in text[:-1] and " " not in text
    data = json.loads(text)
    assert list(data) == sorted(data)


def test_values_reduced_mod_p(tmp_path):
    path = tmp_path / "a.json"
    path.write_text(json.dumps({"prime": 3, "dim": 1, "basis": ["e"], "mul": [[[4]]], "unit": [-2]}))
    _, a = load_file(path)
    assert a.mul.tolist() == [[[1]]] and a.unit.tolist() == [1]


def test_references_resolve_relative_to_file(fixtures_dir, tmp_path):
    kind, f = load_file(fixtures_dir / "bad" / "nonmultiplicative.json", strict=False)
    assert kind == "morphism" and f.source.dim == 1 and f.target.dim == 2
    sub = tmp_path / "nested"
    sub.mkdir()
    (sub / "m.json").write_text(json.dumps({"source": "../f2.json", "target": "../f2.json", "matrix": [[1]]}))
    (tmp_path / "f2.json").write_text((fixtures_dir / "f2.json").read_text())
    _, m = load_file(sub / "m.json")
    assert m.matrix.tolist() == [[1]]


def test_malformed_json_reports_position(fixtures_dir):
    with pytest.raises(InputFormatError) as exc:
        load_file(fixtures_dir / "bad" / "malformed.json")
    assert "line 3 column 2" in str(exc.value)


def test_missing_file_and_field(fixtures_dir, tmp_path):
    with pytest.raises(InputFormatError):
        load_file(tmp_path / "nope.json")
    with pytest.raises(InputFormatError, match="missing field 'dim'"):
        load_file(fixtures_dir / "bad" / "missing_field.json")
    with pytest.raises(InputFormatError, match="object kind"):
        kind_of({"foo": 1})
    with pytest.raises(InputFormatError):
        kind_of([1, 2])


def test_missing_reference(tmp_path):
    (tmp_path / "m.json").write_text(json.dumps({"source": "gone.json", "target": "gone.json", "matrix": []}))
    with pytest.raises(InputFormatError, match="gone.json"):
        load_file(tmp_path / "m.json")


@pytest.mark.parametrize("strict", [True, False])
def test_composite_prime_rejected(fixtures_dir, strict):
    with pytest.raises(NotPrime):
        load_file(fixtures_dir / "bad" / "composite.json", strict=strict)


@pytest.mark.parametrize("strict", [True, False])
def test_shape_mismatch(fixtures_dir, strict):
    with pytest.raises(ShapeMismatch):
        load_file(fixtures_dir / "bad" / "shape.json", strict=strict)


def test_strict_loading_rejects_axiom_failures(fixtures_dir):
    with pytest.raises(NotCommutative):
        load_file(fixtures_dir / "bad" / "noncommutative.json")
    with pytest.raises(NotMultiplicative):
        load_file(fixtures_dir / "bad" / "nonmultiplicative.json")
    for name in ("noncommutative", "nonmultiplicative"):
        kind, obj = load_file(fixtures_dir / "bad" / f"{name}.json", strict=False)
        assert kind in ("algebra", "morphism")


def test_input_errors_share_a_base(fixtures_dir):
    for name in ("malformed", "composite", "shape", "noncommutative", "missing_field"):
        with pytest.raises(AlgebraInputError):
            load_file(fixtures_dir / "bad" / f"{name}.json")


def test_loader_accepts_inline_data():
    loader = Loader()
    a = loader.algebra({"prime": 2, "dim": 1, "mul": [[[1]]], "unit": [1]})
    assert a.same_as(catalog.algebra("F2"))
    with pytest.raises(InputFormatError):
        loader.algebra(5)
    with pytest.raises(InputFormatError):
        loader.algebra({"prime": "2", "dim": 1})


def test_to_data_rejects_unknown():
    with pytest.raises(TypeError):
        to_data(np.zeros(2))
