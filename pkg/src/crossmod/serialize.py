"""Canonical JSON for algebras, morphisms, actions, crossed and 2-crossed modules.

Emission is canonical (sorted keys, integers reduced mod ``p``, one line per
file) so that an emitted file reloads and re-emits byte-identically.  On
load, any sub-object may be replaced by a string: a path to another JSON file,
resolved relative to the directory of the top-level file.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from . import linalg as la
from .algebra import (
    AlgebraAction,
    AlgebraMorphism,
    FiniteAlgebra,
    _algebra,
    _morphism,
    mk_action,
    mk_algebra,
    mk_morphism,
)
from .errors import AlgebraInputError, NotPrime, ShapeMismatch
from .x2mod import PeifferLifting, TwoCrossedModule, TwoCrossedMorphism
from .xmod import CrossedModule, PreCrossedModule, check_crossed


class InputFormatError(AlgebraInputError):
    """Malformed JSON or a missing/ill-typed field; the message names file and location."""


# ----------------------------------------------------------------------------
# to plain data


def _ints(a) -> list:
    return np.asarray(a, dtype=np.int64).tolist()


def algebra_data(a: FiniteAlgebra) -> dict:
    return {
        "prime": a.prime,
        "dim": a.dim,
        "basis": list(a.basis),
        "mul": _ints(a.mul),
        "unit": None if a.unit is None else _ints(a.unit),
    }


def morphism_data(f: AlgebraMorphism) -> dict:
    return {"source": algebra_data(f.source), "target": algebra_data(f.target), "matrix": _ints(f.matrix)}


def action_data(act: AlgebraAction) -> dict:
    return {"actor": algebra_data(act.actor), "acted": algebra_data(act.acted), "act": _ints(act.act)}


def xmod_data(X: PreCrossedModule) -> dict:
    return {
        "C": algebra_data(X.C),
        "R": algebra_data(X.R),
        "bdry": morphism_data(X.bdry),
        "action": action_data(X.action),
    }


def x2mod_data(X: TwoCrossedModule) -> dict:
    return {
        "L": algebra_data(X.L),
        "M": algebra_data(X.M),
        "P": algebra_data(X.P),
        "d2": morphism_data(X.d2),
        "d1": morphism_data(X.d1),
        "actPL": action_data(X.actPL),
        "actPM": action_data(X.actPM),
        "lift": _ints(X.lift.lift),
    }


def triple_data(f: TwoCrossedMorphism, source: TwoCrossedModule | None = None,
                target: TwoCrossedModule | None = None) -> dict:
    out = {"f2": morphism_data(f.f2), "f1": morphism_data(f.f1), "f0": morphism_data(f.f0)}
    if source is not None:
        out["source"] = x2mod_data(source)
    if target is not None:
        out["target"] = x2mod_data(target)
    return out


def to_data(obj) -> dict:
    if isinstance(obj, FiniteAlgebra):
        return algebra_data(obj)
    if isinstance(obj, AlgebraMorphism):
        return morphism_data(obj)
    if isinstance(obj, AlgebraAction):
        return action_data(obj)
    if isinstance(obj, PreCrossedModule):
        return xmod_data(obj)
    if isinstance(obj, TwoCrossedModule):
        return x2mod_data(obj)
    if isinstance(obj, TwoCrossedMorphism):
        return triple_data(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(data) -> str:
    """Canonical text: sorted keys, no whitespace variation, trailing newline."""
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def dump(obj, path) -> str:
    text = dumps(obj if isinstance(obj, dict) else to_data(obj))
    Path(path).write_text(text)
    return text


# ----------------------------------------------------------------------------
# from plain data


def kind_of(data) -> str:
    if not isinstance(data, dict):
        raise InputFormatError("top-level JSON value must be an object")
    for kind, key in (("x2mod", "L"), ("triple", "f2"), ("xmod", "C"), ("morphism", "matrix"),
                      ("action", "act"), ("algebra", "prime")):
        if key in data:
            return kind
    raise InputFormatError(f"cannot tell the object kind from keys {sorted(data)}")


class Loader:
    """Loads objects from JSON, following string references relative to ``base``.

    With ``strict=False`` only shapes are validated, so axiom failures can be
    reported (by ``check``) instead of raised.
    """

    def __init__(self, base: Path | None = None, strict: bool = True):
        self.base = Path(base) if base is not None else Path.cwd()
        self.strict = strict

    # -- plumbing

    def read(self, path) -> dict:
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputFormatError(f"{path}: {exc.strerror or exc}") from exc
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc

    def _deref(self, value, where: str):
        if isinstance(value, str):
            target = (self.base / value).resolve()
            return self.read(target)
        if not isinstance(value, dict):
            raise InputFormatError(f"{where}: expected an object or a file reference")
        return value

    @staticmethod
    def _field(data: dict, key: str, where: str):
        if key not in data:
            raise InputFormatError(f"{where}: missing field '{key}'")
        return data[key]

    def _ints(self, value, where: str, p: int, shape) -> np.ndarray:
        try:
            return la.as_matrix(value if value is not None else [], p, shape)
        except (ValueError, TypeError) as exc:
            raise ShapeMismatch(f"{where}: expected integers of shape {shape}") from exc

    # -- objects

    def algebra(self, value, where: str = "$") -> FiniteAlgebra:
        data = self._deref(value, where)
        p = self._field(data, "prime", where)
        dim = self._field(data, "dim", where)
        if not isinstance(p, int) or not isinstance(dim, int) or dim < 0:
            raise InputFormatError(f"{where}: 'prime' and 'dim' must be non-negative integers")
        mul = data.get("mul", [])
        basis = data.get("basis")
        unit = data.get("unit")
        if self.strict:
            return mk_algebra(p, dim, mul if dim else [], basis, unit)
        if not la.is_prime(p):
            raise NotPrime(f"{where}: {p} is not prime")
        c = self._ints(mul, f"{where}.mul", p, (dim, dim, dim)) if dim else np.zeros((0, 0, 0), np.int64)
        u = None if unit is None else self._ints(unit, f"{where}.unit", p, (dim,))
        return _algebra(p, c, basis, u)

    def morphism(self, value, where: str = "$") -> AlgebraMorphism:
        data = self._deref(value, where)
        s = self.algebra(self._field(data, "source", where), where + ".source")
        t = self.algebra(self._field(data, "target", where), where + ".target")
        raw = self._field(data, "matrix", where)
        if self.strict:
            return mk_morphism(s, t, raw)
        return _morphism(s, t, self._ints(raw, where + ".matrix", s.prime, (t.dim, s.dim)))

    def action(self, value, where: str = "$") -> AlgebraAction:
        data = self._deref(value, where)
        actor = self.algebra(self._field(data, "actor", where), where + ".actor")
        acted = self.algebra(self._field(data, "acted", where), where + ".acted")
        return mk_action(actor, acted, self._field(data, "act", where))

    def xmod(self, value, where: str = "$") -> PreCrossedModule:
        data = self._deref(value, where)
        C = self.algebra(self._field(data, "C", where), where + ".C")
        R = self.algebra(self._field(data, "R", where), where + ".R")
        bdry = self.morphism(self._field(data, "bdry", where), where + ".bdry")
        act = self.action(self._field(data, "action", where), where + ".action")
        X = PreCrossedModule(C, R, bdry, act)
        return CrossedModule(C, R, bdry, act) if check_crossed(X).ok else X

    def x2mod(self, value, where: str = "$") -> TwoCrossedModule:
        data = self._deref(value, where)
        L = self.algebra(self._field(data, "L", where), where + ".L")
        M = self.algebra(self._field(data, "M", where), where + ".M")
        P = self.algebra(self._field(data, "P", where), where + ".P")
        d2 = self.morphism(self._field(data, "d2", where), where + ".d2")
        d1 = self.morphism(self._field(data, "d1", where), where + ".d1")
        aL = self.action(self._field(data, "actPL", where), where + ".actPL")
        aM = self.action(self._field(data, "actPM", where), where + ".actPM")
        lift = self._ints(self._field(data, "lift", where), where + ".lift", P.prime, (M.dim, M.dim, L.dim))
        return TwoCrossedModule(L, M, P, d2, d1, aL, aM, PeifferLifting(M, L, la.frozen(lift)))

    def triple(self, value, where: str = "$"):
        """``(morphism, source or None, target or None)``."""
        data = self._deref(value, where)
        f = TwoCrossedMorphism(
            self.morphism(self._field(data, "f2", where), where + ".f2"),
            self.morphism(self._field(data, "f1", where), where + ".f1"),
            self.morphism(self._field(data, "f0", where), where + ".f0"),
        )
        src = self.x2mod(data["source"], where + ".source") if "source" in data else None
        tgt = self.x2mod(data["target"], where + ".target") if "target" in data else None
        return f, src, tgt

    def load(self, data, where: str = "$"):
        kind = kind_of(data)
        return kind, getattr(self, kind)(data, where)


def load_file(path, strict: bool = True):
    """``(kind, object)`` for a JSON file; references resolve relative to the file."""
    path = Path(path)
    loader = Loader(path.parent, strict)
    data = loader.read(path)
    try:
        return loader.load(data)
    except KeyError as exc:  # pragma: no cover - fields are checked explicitly
        raise InputFormatError(f"{path}: missing field {exc}") from exc
