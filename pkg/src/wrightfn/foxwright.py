"""psi-moments of a Fox-Wright function and the two-sided exponential enclosure.

For a spec with moments ``psi_k = prod Gamma(a_i + k A_i) / prod Gamma(b_j + k B_j)``
(``k = 0, 1, 2``), whenever ``psi_1 > psi_2`` and ``psi_1^2 < psi_0 psi_2``::

    psi_0 exp(psi_1 x / psi_0)  <=  pPsi_q(x)  <=  psi_0 + (e^x - 1) psi_1

We only use the nonnegative axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .gamma import WrightParams, log_gamma
from .ledger import Ledger
from .series import FoxWrightSpec

__all__ = [
    "PsiMoments",
    "BoundResult",
    "psi_moments",
    "bound_conditions",
    "two_sided_bound",
    "kt1_spec",
    "kt2_spec",
    "kt4_spec",
    "yyy5_spec",
]


@dataclass(frozen=True)
class PsiMoments:
    psi0: float
    psi1: float
    psi2: float
    # logs are kept so comparisons survive when the moments under/overflow
    log_psi: tuple = field(default=None, compare=False)

    def logs(self) -> tuple:
        if self.log_psi is not None:
            return self.log_psi
        return (math.log(self.psi0), math.log(self.psi1), math.log(self.psi2))


@dataclass(frozen=True)
class BoundResult:
    lower: float
    upper: float
    conditions_hold: bool
    lhs_rhs_ledger: list

    def as_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "conditions_hold": self.conditions_hold,
            "ledger": [h.as_dict() for h in self.lhs_rhs_ledger],
        }


def _log_moment(s: FoxWrightSpec, k: int) -> float:
    out = 0.0
    for a, A in s.upper:
        x = a + k * A
        if x <= 0:
            raise DomainError(f"gamma argument {x} not positive at k={k}")
        out += log_gamma(x)
    for b, B in s.lower:
        x = b + k * B
        if x <= 0:
            raise DomainError(f"gamma argument {x} not positive at k={k}")
        out -= log_gamma(x)
    return out


def psi_moments(s: FoxWrightSpec) -> PsiMoments:
    logs = tuple(_log_moment(s, k) for k in range(3))
    return PsiMoments(*(math.exp(v) for v in logs), log_psi=logs)


def bound_conditions(m: PsiMoments) -> tuple[bool, list]:
    """Both strict inequalities ``psi1 > psi2`` and ``psi1^2 < psi0 psi2``.

    Returns the verdict and the list of :class:`Hypothesis` entries.  Both
    are decided on the logs with the usual rounding guard, so the exact
    equality ``psi1^2 = psi0 psi2`` counts as a failure.
    """
    l0, l1, l2 = m.logs()
    led = Ledger()
    led.log_lt("psi2 < psi1", l2, l1)
    led.log_lt("psi1^2 < psi0*psi2", 2.0 * l1, l0 + l2)
    return led.all_hold, led.items


def two_sided_bound(s: FoxWrightSpec, x: float) -> BoundResult:
    """Lower and upper enclosure at ``x >= 0``.

    When the moment conditions fail the formula values are still returned,
    flagged with ``conditions_hold=False``.
    """
    if not x >= 0:
        raise DomainError(f"the enclosure is only used for x >= 0, got {x}")
    m = psi_moments(s)
    ok, ledger = bound_conditions(m)
    lower = m.psi0 * math.exp(m.psi1 * x / m.psi0)
    upper = m.psi0 + math.expm1(x) * m.psi1
    return BoundResult(lower, upper, ok, ledger)


# Fox-Wright majorants appearing in the starlikeness/convexity/UCV proofs.


def kt1_spec(p: WrightParams) -> FoxWrightSpec:
    """``1Psi2[(2,1); (a+mu,mu), (b+nu,nu)]`` bounding ``|W' - W/z|``."""
    return FoxWrightSpec([(2.0, 1.0)], [(p.a + p.mu, p.mu), (p.b + p.nu, p.nu)])


def kt2_spec(p: WrightParams) -> FoxWrightSpec:
    """``2Psi3[(1,1),(3,1); (2,1),(a+mu,mu),(b+nu,nu)]`` bounding ``|W' - 1|``."""
    return FoxWrightSpec([(1.0, 1.0), (3.0, 1.0)],
                         [(2.0, 1.0), (p.a + p.mu, p.mu), (p.b + p.nu, p.nu)])


def kt4_spec(p: WrightParams) -> FoxWrightSpec:
    """``1Psi2[(1,1); (a+mu,mu),(b+nu,nu)]`` bounding ``|W/z - 1|``."""
    return FoxWrightSpec([(1.0, 1.0)], [(p.a + p.mu, p.mu), (p.b + p.nu, p.nu)])


def yyy5_spec(p: WrightParams) -> FoxWrightSpec:
    """``1Psi2[(3,1); (a+mu,mu),(b+nu,nu)]`` bounding ``|z W''|``."""
    return FoxWrightSpec([(3.0, 1.0)], [(p.a + p.mu, p.mu), (p.b + p.nu, p.nu)])
