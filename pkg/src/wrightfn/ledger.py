"""Hypothesis ledgers: named inequalities with both sides kept for reporting.

Comparisons carry a small relative guard so that an inequality which is an
exact identity in real arithmetic (``psi1^2 == psi0 psi2`` at ``a*b == 2``,
say) does not get decided by the last bit of rounding.  Strict inequalities
must clear the guard; non-strict ones may fall short by at most the guard.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Hypothesis", "Ledger", "ROUNDING_GUARD"]

ROUNDING_GUARD = 1e-12


def _slack(lhs: float, rhs: float) -> float:
    return ROUNDING_GUARD * max(1.0, abs(lhs), abs(rhs))


@dataclass(frozen=True)
class Hypothesis:
    name: str
    holds: bool
    lhs: float
    rhs: float

    def as_dict(self) -> dict:
        return {"name": self.name, "holds": self.holds, "lhs": _jsonable(self.lhs),
                "rhs": _jsonable(self.rhs)}


def _jsonable(v: float):
    # JSON has no inf/nan
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


class Ledger:
    """Accumulates :class:`Hypothesis` entries."""

    def __init__(self):
        self.items: list[Hypothesis] = []

    def _add(self, name, holds, lhs, rhs):
        self.items.append(Hypothesis(name, bool(holds), float(lhs), float(rhs)))
        return bool(holds)

    def lt(self, name: str, lhs: float, rhs: float) -> bool:
        return self._add(name, lhs < rhs - _slack(lhs, rhs), lhs, rhs)

    def le(self, name: str, lhs: float, rhs: float) -> bool:
        return self._add(name, lhs <= rhs + _slack(lhs, rhs), lhs, rhs)

    def gt(self, name: str, lhs: float, rhs: float) -> bool:
        return self._add(name, lhs > rhs + _slack(lhs, rhs), lhs, rhs)

    def ge(self, name: str, lhs: float, rhs: float) -> bool:
        return self._add(name, lhs >= rhs - _slack(lhs, rhs), lhs, rhs)

    def log_lt(self, name: str, log_lhs: float, log_rhs: float) -> bool:
        """Strict ``exp(log_lhs) < exp(log_rhs)``, decided on the logs.

        The recorded sides are the exponentiated values (they may be 0 or inf
        for extreme parameters; the verdict does not depend on that).
        """
        holds = log_lhs < log_rhs - _slack(log_lhs, log_rhs)
        return self._add(name, holds, _safe_exp(log_lhs), _safe_exp(log_rhs))

    def flag(self, name: str, holds: bool, lhs: float = math.nan, rhs: float = math.nan) -> bool:
        return self._add(name, holds, lhs, rhs)

    @property
    def all_hold(self) -> bool:
        return all(h.holds for h in self.items)


def _safe_exp(v: float) -> float:
    try:
        return math.exp(v)
    except OverflowError:
        return math.inf
