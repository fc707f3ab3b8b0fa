"""Axiom reports: violations are data, not exceptions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _plain(v):
    if isinstance(v, np.ndarray):
        return v.tolist()
    if isinstance(v, (np.integer,)):
        return int(v)
    return v


@dataclass
class Violation:
    axiom: str
    where: tuple
    lhs: object = None
    rhs: object = None
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "axiom": self.axiom,
            "where": [int(w) if isinstance(w, (int, np.integer)) else w for w in self.where],
            "lhs": _plain(self.lhs),
            "rhs": _plain(self.rhs),
            "note": self.note,
        }

    def __str__(self) -> str:
        s = f"{self.axiom} fails at {self.where}"
        if self.lhs is not None or self.rhs is not None:
            s += f": {_plain(self.lhs)} != {_plain(self.rhs)}"
        if self.note:
            s += f" ({self.note})"
        return s


@dataclass
class Report:
    """Per-axiom instance counts plus the first failing instance of each axiom."""

    subject: str = ""
    checked: dict[str, int] = field(default_factory=dict)
    failures: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def expect(self, axiom: str, where: tuple, lhs, rhs) -> bool:
        """Record one instance of ``axiom``; ``lhs`` and ``rhs`` are compared exactly."""
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        a, b = np.asarray(lhs), np.asarray(rhs)
        if a.shape == b.shape and np.array_equal(a, b):
            return True
        self._fail(Violation(axiom, tuple(where), lhs, rhs))
        return False

    def expect_all(self, axiom: str, lhs: np.ndarray, rhs: np.ndarray) -> bool:
        """Compare two tensors whose last axis is the value; leading axes index the instances."""
        lhs, rhs = np.asarray(lhs), np.asarray(rhs)
        if lhs.shape != rhs.shape:
            raise ValueError(f"{axiom}: shape {lhs.shape} vs {rhs.shape}")
        n = int(np.prod(lhs.shape[:-1])) if lhs.ndim > 1 else 1
        self.checked[axiom] = self.checked.get(axiom, 0) + n
        if lhs.shape[-1] == 0 or n == 0:
            return True
        bad = np.argwhere(np.any(lhs != rhs, axis=-1))
        if len(bad) == 0:
            return True
        where = tuple(int(x) for x in bad[0])
        self.failures[axiom] = self.failures.get(axiom, 0) + len(bad)
        self.violations.append(Violation(axiom, where, lhs[where], rhs[where]))
        return False

    def require(self, axiom: str, cond: bool, where: tuple = (), note: str = "") -> bool:
        self.checked[axiom] = self.checked.get(axiom, 0) + 1
        if not cond:
            self._fail(Violation(axiom, tuple(where), note=note))
        return bool(cond)

    def _fail(self, v: Violation) -> None:
        n = self.failures.get(v.axiom, 0)
        self.failures[v.axiom] = n + 1
        if n == 0:
            self.violations.append(v)

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for k, n in other.checked.items():
            key = prefix + k
            self.checked[key] = self.checked.get(key, 0) + n
        for k, n in other.failures.items():
            key = prefix + k
            self.failures[key] = self.failures.get(key, 0) + n
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.where, v.lhs, v.rhs, v.note))
        return self

    def failed(self, axiom: str) -> bool:
        return axiom in self.failures

    def first(self, axiom: str) -> Violation | None:
        for v in self.violations:
            if v.axiom == axiom:
                return v
        return None

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checked": dict(sorted(self.checked.items())),
            "failures": dict(sorted(self.failures.items())),
            "violations": [v.to_dict() for v in self.violations],
        }

    def summary(self) -> str:
        lines = [f"{self.subject or 'report'}: {'PASS' if self.ok else 'FAIL'}"]
        for axiom in sorted(self.checked):
            status = "ok" if axiom not in self.failures else f"{self.failures[axiom]} failing"
            lines.append(f"  {axiom}: {self.checked[axiom]} instances, {status}")
        for v in self.violations:
            lines.append(f"  - {v}")
        return "\n".join(lines)
