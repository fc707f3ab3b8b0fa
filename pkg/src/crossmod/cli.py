"""Command-line front end.

Every verb loads JSON object files, runs a construction or a check and prints
a report.  Exit codes depend only on the outcome: 0 when every check passes,
1 on an axiom violation, 2 on bad input or usage, 3 when a search exceeds the
limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import linalg as la
from .algebra import check_action, check_algebra, check_morphism
from .catcheck import (
    TestFamily,
    check_adjunction_g1,
    check_adjunction_pullback_induced,
    check_cartesian,
    check_cocartesian,
    check_free_2xmod,
    check_induced_naturality,
    check_pullback_naturality,
    enum_2x_morphisms,
    enum_alg_morphisms,
)
from .constructions import induced_2xmod_epi, pullback_2xmod
from .errors import AlgebraInputError, InternalMathError, NotMono, SearchSpaceTooLarge
from .report import Report
from .serialize import InputFormatError, Loader, dumps, kind_of, to_data, triple_data, x2mod_data
from .x2mod import check_2morphism, check_2xmod, functor_alpha, functor_beta, functor_sk, functor_tr
from .xmod import check_crossed, check_precrossed

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(AlgebraInputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit; we want an exit code
        raise UsageError(f"{self.prog}: {message}")


@dataclass
class Workspace:
    """Loaded objects keyed by resolved path, with the kind each was loaded as."""

    strict: bool = True
    bindings: dict = field(default_factory=dict)

    def load(self, path, *kinds: str):
        return self.load_any(path, *kinds)[1]

    def load_any(self, path, *kinds: str):
        """``(kind, object)``; ``kinds`` restricts what the file may contain."""
        path = Path(path).resolve()
        key = (path, self.strict)
        if key not in self.bindings:
            loader = Loader(path.parent, self.strict)
            data = loader.read(path)
            kind = kind_of(data)
            if kinds and kind not in kinds:
                raise InputFormatError(f"{path}: expected {' or '.join(kinds)}, found {kind}")
            try:
                self.bindings[key] = (kind, getattr(loader, kind)(data))
            except InputFormatError as exc:
                raise InputFormatError(f"{path}: {exc}") from exc
        kind, obj = self.bindings[key]
        if kinds and kind not in kinds:
            raise InputFormatError(f"{path}: expected {' or '.join(kinds)}, found {kind}")
        return kind, obj

    def valid_x2mod(self, path):
        X = self.load(path, "x2mod")
        rep = check_2xmod(X)
        if not rep.ok:
            raise AlgebraInputError(f"{path}: not a 2-crossed module: {rep.violations[0]}")
        return X

    def family(self, directory) -> TestFamily:
        d = Path(directory)
        if not d.is_dir():
            raise InputFormatError(f"{d}: not a directory")
        names, members = [], []
        for f in sorted(d.glob("*.json")):
            names.append(f.stem)
            members.append(self.valid_x2mod(f))
        return TestFamily(tuple(members), tuple(names))


# ----------------------------------------------------------------------------
# output


@dataclass
class Outcome:
    report: Report
    extra: dict = field(default_factory=dict)

    @property
    def code(self) -> int:
        return EXIT_OK if self.report.ok else EXIT_VIOLATION


def _write(path, data) -> None:
    Path(path).write_text(dumps(data))


def _emit(out, outcome: Outcome, as_json: bool) -> None:
    if as_json:
        body = {"ok": outcome.report.ok, "exit": outcome.code, "report": outcome.report.to_dict()}
        body.update(outcome.extra)
        out.write(dumps(body))
        return
    out.write(outcome.report.summary() + "\n")
    for k, v in outcome.extra.items():
        if isinstance(v, (int, str)):
            out.write(f"{k}: {v}\n")


# ----------------------------------------------------------------------------
# verbs


def cmd_check(ws: Workspace, a) -> Outcome:
    ws.strict = False
    kind, obj = ws.load_any(a.file)
    rep = Report(f"check {kind}")
    if kind == "algebra":
        rep.merge(check_algebra(obj))
    elif kind == "morphism":
        rep.merge(check_algebra(obj.source), "source:")
        rep.merge(check_algebra(obj.target), "target:")
        rep.merge(check_morphism(obj))
    elif kind == "action":
        rep.merge(check_algebra(obj.actor), "actor:")
        rep.merge(check_algebra(obj.acted), "acted:")
        rep.merge(check_action(obj))
    elif kind == "xmod":
        rep.merge(check_algebra(obj.C), "C:")
        rep.merge(check_algebra(obj.R), "R:")
        rep.merge(check_morphism(obj.bdry), "bdry:")
        rep.merge(check_crossed(obj) if a.crossed else check_precrossed(obj))
    elif kind == "x2mod":
        for name in ("L", "M", "P"):
            rep.merge(check_algebra(getattr(obj, name)), f"{name}:")
        rep.merge(check_morphism(obj.d2), "d2:")
        rep.merge(check_morphism(obj.d1), "d1:")
        rep.merge(check_2xmod(obj))
    else:
        f, src, tgt = obj
        src = ws.load(a.source, "x2mod") if a.source else src
        tgt = ws.load(a.target, "x2mod") if a.target else tgt
        if src is None or tgt is None:
            raise UsageError("a triple needs its source and target (in the file or via --source/--target)")
        for name in ("f2", "f1", "f0"):
            rep.merge(check_morphism(getattr(f, name)), f"{name}:")
        rep.merge(check_2morphism(f, src, tgt))
    extra = {"kind": kind}
    if kind == "xmod":
        extra["crossed"] = check_crossed(obj).ok
    return Outcome(rep, extra)


def _bundle(a, result, canonical, src, tgt, report: Report) -> Outcome:
    data = x2mod_data(result)
    can = triple_data(canonical, src, tgt)
    if a.output:
        _write(a.output, data)
    if a.canonical_out:
        _write(a.canonical_out, can)
    return Outcome(report, {"dims": list(result.dims()), "result": data, "canonical": can})


def cmd_pullback(ws: Workspace, a) -> Outcome:
    phi = ws.load(a.phi, "morphism")
    X = ws.valid_x2mod(a.x)
    res = pullback_2xmod(phi, X)
    return _bundle(a, res.result, res.canonical, res.result, X, res.report)


def cmd_induce(ws: Workspace, a) -> Outcome:
    phi = ws.load(a.phi, "morphism")
    D = ws.valid_x2mod(a.d)
    res = induced_2xmod_epi(phi, D)
    return _bundle(a, res.result, res.canonical, D, res.result, res.report)


def cmd_homs(ws: Workspace, a) -> Outcome:
    A = ws.load(a.a, "algebra", "x2mod")
    B = ws.load(a.b, "algebra", "x2mod")
    rep = Report("hom-set")
    if type(A) is not type(B):
        raise UsageError("homs needs two algebras or two 2-crossed modules")
    if a.base and not hasattr(A, "L"):
        raise UsageError("--base only applies to 2-crossed modules")
    if hasattr(A, "L"):
        base = ws.load(a.base, "morphism") if a.base else None
        hs = enum_2x_morphisms(A, B, base, a.limit)
        for f in hs:
            rep.merge(check_2morphism(f, A, B), "element:")
        elements = [triple_data(f) for f in hs]
    else:
        hs = enum_alg_morphisms(A, B, a.limit)
        for f in hs:
            rep.merge(check_morphism(f), "element:")
        elements = [la.as_rows(f.matrix, f.source.dim).tolist() for f in hs]
    rep.require("distinct", len(hs.keys()) == len(hs))
    return Outcome(rep, {"count": len(hs), "elements": elements})


def cmd_adjoint(ws: Workspace, a) -> Outcome:
    if a.phi and a.d and a.b:
        phi = ws.load(a.phi, "morphism")
        rep = check_adjunction_pullback_induced(phi, ws.valid_x2mod(a.d), ws.valid_x2mod(a.b), a.limit)
    elif a.x and a.r:
        rep = check_adjunction_g1(ws.valid_x2mod(a.x), ws.load(a.r, "algebra"), a.limit)
    else:
        raise UsageError("adjoint needs --phi/--d/--b or --x/--r")
    return Outcome(rep)


def _triple(ws: Workspace, a):
    f, src, tgt = ws.load(a.f, "triple")
    src = ws.valid_x2mod(a.source) if a.source else src
    tgt = ws.valid_x2mod(a.target) if a.target else tgt
    if src is None or tgt is None:
        raise UsageError("the morphism file needs source and target (embedded or via --source/--target)")
    rep = check_2morphism(f, src, tgt)
    if not rep.ok:
        raise AlgebraInputError(f"{a.f}: not a 2-crossed morphism: {rep.violations[0]}")
    return f, src, tgt


def cmd_cartesian(ws: Workspace, a) -> Outcome:
    f, Y, X = _triple(ws, a)
    fam = ws.family(a.family)
    return Outcome(check_cartesian(f, Y, X, fam, a.limit), {"family_size": len(fam)})


def cmd_cocartesian(ws: Workspace, a) -> Outcome:
    f, Z, Y = _triple(ws, a)
    fam = ws.family(a.family)
    return Outcome(check_cocartesian(f, Z, Y, fam, a.limit), {"family_size": len(fam)})


def cmd_free(ws: Workspace, a) -> Outcome:
    X = ws.valid_x2mod(a.x)
    try:
        theta = json.loads(Path(a.theta).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputFormatError(f"{a.theta}: {exc}") from exc
    if isinstance(theta, dict):
        theta = theta.get("matrix")
    try:
        theta = la.as_matrix(theta, X.prime)
        theta = theta.reshape(X.L.dim, -1) if theta.size else np.zeros((X.L.dim, 0), np.int64)
    except (TypeError, ValueError) as exc:
        raise InputFormatError(f"{a.theta}: theta must be a {X.L.dim}-row integer matrix") from exc
    fam = ws.family(a.family)
    source = ws.valid_x2mod(a.source) if a.source else None
    phi = ws.load(a.phi, "morphism") if a.phi else None
    if (source is None) != (phi is None):
        raise UsageError("--source and --phi go together")
    return Outcome(check_free_2xmod(X, theta, fam, source, phi, a.limit), {"family_size": len(fam)})


def cmd_naturality(ws: Workspace, a) -> Outcome:
    phi = ws.load(a.phi, "morphism")
    phi_prime = ws.load(a.phi_prime, "morphism")
    X = ws.valid_x2mod(a.x)
    check = check_induced_naturality if a.induced else check_pullback_naturality
    return Outcome(check(phi, phi_prime, X, a.limit))


def _functor(kind_in: str, fn, checker):
    def run(ws: Workspace, a) -> Outcome:
        obj = ws.load(a.file, kind_in)
        if kind_in == "xmod":
            pre = check_precrossed(obj)
            if not pre.ok:
                raise AlgebraInputError(f"{a.file}: not a pre-crossed module: {pre.violations[0]}")
        else:
            obj = ws.valid_x2mod(a.file)
        out = fn(obj)
        data = to_data(out)
        if a.output:
            _write(a.output, data)
        return Outcome(checker(out), {"result": data})

    return run


VERBS = {
    "check": cmd_check,
    "pullback": cmd_pullback,
    "induce": cmd_induce,
    "homs": cmd_homs,
    "adjoint": cmd_adjoint,
    "cartesian": cmd_cartesian,
    "cocartesian": cmd_cocartesian,
    "free": cmd_free,
    "naturality": cmd_naturality,
    "sk": _functor("xmod", functor_sk, check_2xmod),
    "tr": _functor("x2mod", functor_tr, check_precrossed),
    "alpha": _functor("xmod", functor_alpha, check_2xmod),
    "beta": _functor("x2mod", functor_beta, check_crossed),
}


def _globals(default) -> argparse.ArgumentParser:
    # the flags are accepted before or after the verb; the verb level must not
    # overwrite a value given at the top level, hence SUPPRESS there
    g = _Parser(add_help=False)
    g.add_argument("--json", action="store_true", default=False if default else argparse.SUPPRESS,
                   help="machine-readable report on stdout")
    g.add_argument("--limit", type=int, default=None if default else argparse.SUPPRESS,
                   help="search cap (default 10^7 or $CROSSMOD_SEARCH_LIMIT)")
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _globals(False)
    ap = _Parser(prog="crossmod", description="Crossed and 2-crossed modules of algebras over F_p.",
                 parents=[_globals(True)])
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = verb("check", "run the full axiom suite on an object file")
    p.add_argument("file")
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--crossed", action="store_true", help="require the Peiffer identity for xmod files")

    for name, arg, help_ in (("pullback", "--x", "pull back along a monomorphism"),
                             ("induce", "--d", "induce along an epimorphism")):
        p = verb(name, help_)
        p.add_argument("--phi", required=True)
        p.add_argument(arg, required=True)
        p.add_argument("-o", "--output")
        p.add_argument("--canonical-out")

    p = verb("homs", "enumerate a hom-set")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--base")

    p = verb("adjoint", "verify an adjunction bijection")
    for flag in ("--phi", "--d", "--b", "--x", "--r"):
        p.add_argument(flag)

    for name in ("cartesian", "cocartesian"):
        p = verb(name, f"check that a morphism is {name} against a family")
        p.add_argument("--f", required=True)
        p.add_argument("--family", required=True)
        p.add_argument("--source")
        p.add_argument("--target")

    p = verb("free", "check freeness on a basis function")
    p.add_argument("--x", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--family", required=True)
    p.add_argument("--source")
    p.add_argument("--phi")

    p = verb("naturality", "compare iterated and composite base change")
    p.add_argument("--phi", required=True)
    p.add_argument("--phi-prime", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--induced", action="store_true")

    for name in ("sk", "tr", "alpha", "beta"):
        p = verb(name, f"apply the {name} functor")
        p.add_argument("file")
        p.add_argument("-o", "--output")
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = False
    try:
        args = build_parser().parse_args(argv)
        as_json = args.json
        if args.limit is not None and args.limit <= 0:
            raise UsageError("--limit must be positive")
        outcome = VERBS[args.verb](Workspace(), args)
    except SearchSpaceTooLarge as exc:
        return _fail(out, err, as_json, EXIT_LIMIT, "search_limit", exc)
    except NotMono as exc:
        w = exc.witness
        detail = None if w is None else {"c2": w.c2.tolist(), "s": w.s.tolist(), "value": w.value.tolist()}
        return _fail(out, err, as_json, EXIT_INPUT, "not_mono", exc, detail)
    except AlgebraInputError as exc:
        return _fail(out, err, as_json, EXIT_INPUT, type(exc).__name__, exc)
    except InternalMathError as exc:
        return _fail(out, err, as_json, EXIT_VIOLATION, type(exc).__name__, exc)
    _emit(out, outcome, as_json)
    return outcome.code


def _fail(out, err, as_json, code, error, exc, detail=None) -> int:
    if as_json:
        body = {"ok": False, "exit": code, "error": error, "message": str(exc)}
        if detail is not None:
            body["witness"] = detail
        out.write(dumps(body))
    msg = f"error: {exc}"
    if detail is not None:
        msg += f"\nwitness: {json.dumps(detail)}"
    err.write(msg + "\n")
    return code


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
