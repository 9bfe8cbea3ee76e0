"""Violation reports shared by all structure checkers.

A checker evaluates a list of identities on basis tuples and returns a
:class:`CheckReport`.  Each violation records the identity name, the basis
tuple at which it fails, and the exact residual vector.  Reports are
deterministic: identities are evaluated in a fixed order and tuples in
lexicographic order, so the first violation of a broken structure is stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np


@dataclass(frozen=True)
class Violation:
    equation: str
    at: tuple[int, ...]
    residual: tuple[Fraction, ...]

    def __str__(self) -> str:
        res = ", ".join(str(x) for x in self.residual)
        return f"{self.equation} at basis tuple {self.at}: residual ({res})"


@dataclass
class CheckReport:
    violations: list[Violation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed

    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def equations_violated(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for v in self.violations:
            seen.setdefault(v.equation, None)
        return tuple(seen)

    def render(self, max_per_equation: int = 20) -> str:
        """Human-readable report, truncated to ``max_per_equation`` residuals
        per identity with a total count."""
        if self.passed:
            lines = ["pass"]
        else:
            lines = [f"FAIL: {len(self.violations)} violation(s)"]
            by_eq: dict[str, list[Violation]] = {}
            for v in self.violations:
                by_eq.setdefault(v.equation, []).append(v)
            for eq, vs in by_eq.items():
                shown = vs[:max_per_equation]
                lines.append(f"  [{eq}] {len(vs)} violation(s)")
                for v in shown:
                    res = ", ".join(str(x) for x in v.residual)
                    lines.append(f"    at {v.at}: ({res})")
                if len(vs) > len(shown):
                    lines.append(f"    ... {len(vs) - len(shown)} more")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


def collect_tensor_violations(
    report: CheckReport,
    equation: str,
    residual: np.ndarray,
    *,
    stop_after: Optional[int] = None,
) -> bool:
    """Append a violation for every basis tuple (the input axes, i.e. all axes
    after axis 0) at which the residual slice is nonzero.

    Returns True when the caller should stop checking further identities
    because ``stop_after`` violations have been collected in total.
    """
    residual = np.asarray(residual)
    if residual.ndim == 0:
        if residual[()] != 0:
            report.violations.append(Violation(equation, (), (residual[()],)))
    elif residual.ndim == 1:
        if any(x != 0 for x in residual):
            report.violations.append(Violation(equation, (), tuple(residual)))
    else:
        in_shape = residual.shape[1:]
        for idx in itertools.product(*(range(s) for s in in_shape)):
            column = residual[(slice(None),) + idx]
            if any(x != 0 for x in column):
                report.violations.append(Violation(equation, idx, tuple(column)))
                if stop_after is not None and len(report.violations) >= stop_after:
                    return True
    return stop_after is not None and len(report.violations) >= stop_after
