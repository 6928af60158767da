"""
Certification reports.

A :class:`Report` is a list of named checks. Each check states the identity it
tests; a failing check carries a :class:`Witness` naming the basis input on
which the two sides differ, together with both sides' values. ``Check.replay``
re-applies both composite maps to that basis vector, so a witness can always be
re-verified independently of the comparison that produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import CheckFailed, DimensionMismatch
from .linalg import Mat, basis_vector, unravel


@dataclass(frozen=True)
class Witness:
    index: tuple
    column: int
    lhs: tuple
    rhs: tuple

    def to_json(self):
        return {
            "index": list(self.index),
            "column": self.column,
            "lhs": [str(x) for x in self.lhs],
            "rhs": [str(x) for x in self.rhs],
        }


@dataclass
class Check:
    name: str
    identity: str
    passed: bool
    witness: Witness | None = None
    _replay: Callable[[], bool] | None = field(default=None, repr=False, compare=False)

    def replay(self) -> bool:
        """True iff the recorded failure is reproduced from scratch."""
        if self.passed or self._replay is None:
            return False
        return self._replay()

    def to_json(self):
        d = {"name": self.name, "identity": self.identity, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness.to_json()
        return d


def compare(name: str, identity: str, lhs: Mat, rhs: Mat, dims=None) -> Check:
    """Check ``lhs == rhs`` as linear maps; ``dims`` factors the domain for witnesses."""
    if lhs.shape != rhs.shape:
        raise DimensionMismatch(f"{name}: sides have shapes {lhs.shape} and {rhs.shape}")
    if lhs == rhs:
        return Check(name, identity, True)
    diff = lhs - rhs
    j = min(c for _, c in diff.nonzero())
    index = unravel(j, dims) if dims else (j,)

    def replay(lhs=lhs, rhs=rhs, j=j):
        e = basis_vector(lhs.cols, j)
        return lhs @ e != rhs @ e

    w = Witness(index, j, tuple(lhs.column(j)), tuple(rhs.column(j)))
    return Check(name, identity, False, w, replay)


def fact(name: str, identity: str, lhs, rhs, recompute: Callable[[], tuple] | None = None) -> Check:
    """Check a scalar-valued fact (a rank, a dimension, ...) ``lhs == rhs``."""
    if lhs == rhs:
        return Check(name, identity, True)
    w = Witness((), 0, (lhs,), (rhs,))

    def replay():
        a, b = recompute() if recompute else (lhs, rhs)
        return a != b

    return Check(name, identity, False, w, replay)


class Report:
    def __init__(self, subject: str, checks=None):
        self.subject = subject
        self.checks: list[Check] = list(checks or [])

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other: "Report", prefix: str | None = None) -> "Report":
        for c in other.checks:
            if prefix:
                c = Check(f"{prefix}/{c.name}", c.identity, c.passed, c.witness, c._replay)
            self.checks.append(c)
        return self

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def raise_if_failed(self) -> "Report":
        if not self.ok:
            raise CheckFailed(self)
        return self

    def to_json(self):
        return {
            "subject": self.subject,
            "passed": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }

    def lines(self):
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"[{mark}] {c.name}: {c.identity}"
            if c.witness is not None:
                w = c.witness
                line += f"  (at basis {w.index}: {list(map(str, w.lhs))} != {list(map(str, w.rhs))})"
            yield line

    def __str__(self):
        head = f"{self.subject}: {'all checks pass' if self.ok else f'{len(self.failures())} failing'}"
        return "\n".join([head, *self.lines()])

    def __repr__(self):
        return f"Report({self.subject!r}, {len(self.checks)} checks, ok={self.ok})"
