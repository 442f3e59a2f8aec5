"""Sufficient conditions for starlikeness, convexity and related properties.

Every criterion returns a :class:`CriterionReport` holding the full ledger of
hypotheses with both evaluated sides, so a failing verdict says exactly which
inequality broke.  ``NotEstablished`` only means the sufficient condition
does not apply; it never asserts the property is false.

Gamma ratios are compared in log space.  Write ``G = log Gamma``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .gamma import WrightParams, log_gamma
from .ledger import Ledger
from .properties import (
    CONVEX_HALF,
    SP,
    STARLIKE_D,
    STARLIKE_HALF,
    UCV,
    PropertyKind,
    PropertyRegion,
)

__all__ = [
    "Verdict",
    "CriterionReport",
    "SEMANTICS_NOTE",
    "kt1_starlike",
    "kt2_convex_half",
    "kt3_starlike_via_deriv",
    "kt4_starlike_half",
    "yyy5_ucv",
    "threshold_starlike",
    "threshold_starlike_order",
    "threshold_sp",
    "threshold_th4",
    "threshold_convex",
    "phi",
    "psi_eta",
    "tau",
    "phi1",
    "phi2",
    "psi1",
    "psi2",
    "kt1_b_root",
    "CRITERIA",
    "run_criteria",
    "Family",
    "family_params",
    "family_preset",
    "by_id",
]

SEMANTICS_NOTE = (
    "sufficient condition only: NotEstablished does not mean the property fails"
)
_E = math.e
_SQRT5 = math.sqrt(5.0)


class Verdict(str, enum.Enum):
    ESTABLISHED = "Established"
    NOT_ESTABLISHED = "NotEstablished"


@dataclass(frozen=True)
class CriterionReport:
    theorem_id: str
    params: WrightParams
    hypotheses: tuple
    conclusions: tuple
    verdict: Verdict
    note: str = field(default=SEMANTICS_NOTE, compare=False)

    @property
    def conclusion(self) -> Optional[PropertyRegion]:
        """The primary conclusion (the first one listed)."""
        return self.conclusions[0] if self.conclusions else None

    @property
    def established(self) -> bool:
        return self.verdict is Verdict.ESTABLISHED

    def failing(self) -> list:
        return [h for h in self.hypotheses if not h.holds]

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": self.params.as_dict(),
            "hypotheses": [h.as_dict() for h in self.hypotheses],
            "conclusions": [c.as_dict() for c in self.conclusions],
            "verdict": self.verdict.value,
            "note": self.note,
        }


def _report(theorem_id, p, led: Ledger, conclusions) -> CriterionReport:
    verdict = Verdict.ESTABLISHED if led.all_hold else Verdict.NOT_ESTABLISHED
    return CriterionReport(theorem_id, p, tuple(led.items), tuple(conclusions), verdict)


def _domain_ge1(led: Ledger, p: WrightParams):
    for name in ("a", "b", "mu", "nu"):
        led.ge(f"{name} >= 1", getattr(p, name), 1.0)


def _domain_pos(led: Ledger, p: WrightParams):
    for name in ("a", "b", "mu", "nu"):
        led.gt(f"{name} > 0", getattr(p, name), 0.0)


def _G(p: WrightParams):
    """``G(a + j mu)`` and ``G(b + j nu)`` for ``j = 0..3``."""
    ga = [log_gamma(p.a + j * p.mu) for j in range(4)]
    gb = [log_gamma(p.b + j * p.nu) for j in range(4)]
    return ga, gb


def _alphas(ga, gb):
    # normalized coefficients alpha_1, alpha_2
    a1 = math.exp(ga[0] + gb[0] - ga[1] - gb[1])
    a2 = math.exp(ga[0] + gb[0] - ga[2] - gb[2])
    return a1, a2


# Two recurring gamma-ratio inequalities, with the numeric constants that
# differ between theorems:
#   G(a+2mu) - G(a+3mu) < G(b+3nu) - G(b+2nu) + log c1
#   G(a+mu) + G(a+3mu) - 2G(a+2mu) < 2G(b+2nu) - G(b+nu) - G(b+3nu) + log c2


def _ratio_23(led, name, ga, gb, c1):
    led.log_lt(name, ga[2] - ga[3], gb[3] - gb[2] + math.log(c1))


def _ratio_123(led, name, ga, gb, c2):
    led.log_lt(name, ga[1] + ga[3] - 2 * ga[2], 2 * gb[2] - gb[1] - gb[3] + math.log(c2))


def kt1_b_root(a: float) -> float:
    """Positive root ``b`` of ``(a^2+a) b^2 + (a^2-a-1) b - (a+1) = 0``."""
    q = a * a - a - 1.0
    return (-q + math.sqrt(q * q + 4.0 * (a + 1.0) * (a * a + a))) / (2.0 * (a * a + a))


def kt1_starlike(p: WrightParams) -> CriterionReport:
    """Starlike in the unit disk via the ``1Psi2[(2,1); ...]`` majorant."""
    led = Ledger()
    _domain_ge1(led, p)
    a, b = p.a, p.b
    led.gt("b > b_root(a)", b, kt1_b_root(a))
    ga, gb = _G(p)
    _ratio_23(led, "H1(i)", ga, gb, 1.0 / 3.0)
    _ratio_123(led, "H1(ii)", ga, gb, 1.5)
    a1, a2 = _alphas(ga, gb)
    s = a * b * (a + b + a * b)
    led.lt("H1(iii)", a1 - 2.0 * (1.0 - _E) * a2, (s - (a + 1.0) * (b + 1.0)) / s)
    return _report("kt1_starlike", p, led, [STARLIKE_D])


def _h2(led, p, ga, gb):
    _ratio_23(led, "H2(i)", ga, gb, 3.0 / 8.0)
    _ratio_123(led, "H2(ii)", ga, gb, 16.0 / 9.0)


def kt2_convex_half(p: WrightParams) -> CriterionReport:
    """Convex in the disk of radius 1/2."""
    led = Ledger()
    _domain_pos(led, p)
    ga, gb = _G(p)
    _h2(led, p, ga, gb)
    a1, a2 = _alphas(ga, gb)
    led.lt("H2(iii)", 2.0 * a1 - 3.0 * (1.0 - _E) * a2, 1.0)
    return _report("kt2_convex_half", p, led, [CONVEX_HALF])


def kt3_starlike_via_deriv(p: WrightParams) -> CriterionReport:
    """Starlike in the unit disk from ``|W' - 1| < 2/sqrt(5)``."""
    led = Ledger()
    _domain_pos(led, p)
    ga, gb = _G(p)
    _h2(led, p, ga, gb)
    a1, a2 = _alphas(ga, gb)
    led.lt("2a1 - 3(1-e)a2 < 2/sqrt5", 2.0 * a1 - 3.0 * (1.0 - _E) * a2, 2.0 / _SQRT5)
    return _report("kt3_starlike_via_deriv", p, led, [STARLIKE_D])


def kt4_starlike_half(p: WrightParams) -> CriterionReport:
    """Starlike in the disk of radius 1/2."""
    led = Ledger()
    _domain_pos(led, p)
    ga, gb = _G(p)
    _ratio_23(led, "H3(i)", ga, gb, 0.5)
    _ratio_123(led, "H3(ii)", ga, gb, 2.0)
    a1, a2 = _alphas(ga, gb)
    led.lt("H3(iii)", a1 - (1.0 - _E) * a2, 1.0)
    return _report("kt4_starlike_half", p, led, [STARLIKE_HALF])


def yyy5_ucv(p: WrightParams) -> CriterionReport:
    """Uniformly convex in the unit disk.

    Conditions H4(i)-(iii) alone do not control ``|W' - 1|`` (H4'') or
    ``|z W''|`` (H4'), so those bounds are checked too and enter the verdict.
    """
    led = Ledger()
    _domain_pos(led, p)
    ga, gb = _G(p)
    h4_i = (ga[1] - ga[2], gb[2] - gb[1] - math.log(4.0))
    led.log_lt("H4(i)", *h4_i)
    led.log_lt("H4(ii)", ga[0] + ga[2] - 2 * ga[1],
               2 * gb[2] - gb[1] - gb[3] + math.log(4.0 / 3.0))
    a1, a2 = _alphas(ga, gb)
    led.lt("H4(iii)", a1 - 3.0 * (1.0 - _E) * a2, 0.25)
    led.log_lt("H4'(i)", *h4_i)
    _ratio_123(led, "H4'(ii)", ga, gb, 4.0 / 3.0)
    _ratio_23(led, "H4''(i)", ga, gb, 3.0 / 8.0)
    _ratio_123(led, "H4''(ii)", ga, gb, 16.0 / 9.0)
    return _report("yyy5_ucv", p, led, [UCV])


# Closed-form b-thresholds.  Each is the positive root in b of the modulus
# bound behind the matching criterion.


def phi(a: float) -> float:
    return (3.0 * a + 2.0) / (a * (a + 1.0))


def psi_eta(a: float, eta: float) -> tuple[float, float]:
    """Threshold for starlikeness of order ``eta``; returns ``(psi, discriminant)``.

    The sign in front of the ``4 a c (a+1)(...)`` term is ``+``: that is what
    solving ``((a+1)(b+1)+a) <= c (ab(a+b+ab) - (a+1)(b+1))`` for ``b`` gives,
    and it makes ``psi(a, 0) == phi(a)``.  ``psi`` is NaN when the
    discriminant is negative (it never is for ``0 <= eta < 1``).
    """
    c = 1.0 - eta
    n = (a + 1.0) + c * (a + 1.0 - a * a)
    disc = n * n + 4.0 * a * c * (a + 1.0) * (c * (a + 1.0) + 2.0 * a + 1.0)
    if disc < 0:
        return math.nan, disc
    return (n + math.sqrt(disc)) / (2.0 * a * c * (a + 1.0)), disc


def tau(a: float) -> float:
    return (3.0 * (a + 1.0) - a * a
            + math.sqrt(a ** 4 + 14 * a ** 3 + 35 * a * a + 30 * a + 9)) / (2.0 * a * (a + 1.0))


def phi1(a: float) -> float:
    return ((a + 1.0 - a * a)
            + math.sqrt(a ** 4 + 2 * a ** 3 + 7 * a * a + 6 * a + 1)) / (2.0 * a * (a + 1.0))


def phi2(a: float) -> float:
    s5 = _SQRT5
    return (s5 * (a + 1.0) - 2.0 * a * a
            + math.sqrt(4 * a ** 4 + 4 * s5 * a ** 3 + (5 + 12 * s5) * a * a
                        + 2 * (5 + 4 * s5) * a + 5)) / (4.0 * a * (a + 1.0))


def psi1(a: float) -> float:
    return ((3.0 - a) + math.sqrt(a * a + 2 * a + 9)) / (2.0 * a)


def psi2(a: float) -> float:
    s5 = _SQRT5
    return (s5 * (2 * a + 3) - 2.0 * a * a
            + math.sqrt(4 * a ** 4 + 8 * s5 * a ** 3 + 20 * (1 + s5) * a * a
                        + 4 * (15 + 4 * s5) * a + 45)) / (4.0 * a * (a + 1.0))


def _threshold(theorem_id, p, name, fn, conclusions) -> CriterionReport:
    led = Ledger()
    _domain_ge1(led, p)
    led.ge(f"b >= {name}(a)", p.b, fn(p.a))
    return _report(theorem_id, p, led, conclusions)


def threshold_starlike(p: WrightParams) -> CriterionReport:
    """``b >= phi(a)``: starlike in the unit disk, and close-to-convex with
    respect to the starlike function with ``nu`` replaced by 1."""
    witness = WrightParams(p.mu, p.a, 1.0, p.b)
    ctc = PropertyRegion(PropertyKind.CLOSE_TO_CONVEX, witness=witness)
    return _threshold("threshold_starlike", p, "phi", phi, [STARLIKE_D, ctc])


def threshold_starlike_order(p: WrightParams, eta: float) -> CriterionReport:
    led = Ledger()
    _domain_ge1(led, p)
    ok = led.flag("0 <= eta < 1", 0.0 <= eta < 1.0, eta, 1.0)
    if not ok:
        return _report("threshold_starlike_order", p, led, [])
    value, disc = psi_eta(p.a, eta)
    if led.ge("discriminant >= 0", disc, 0.0):
        led.ge("b >= psi(a, eta)", p.b, value)
    conclusion = PropertyRegion(PropertyKind.STARLIKE_ORDER, eta=float(eta))
    return _report("threshold_starlike_order", p, led, [conclusion])


def threshold_sp(p: WrightParams) -> CriterionReport:
    return _threshold("threshold_sp", p, "tau", tau, [SP])


def threshold_th4(p: WrightParams) -> tuple[CriterionReport, CriterionReport]:
    """Part (i): starlike in the half disk; part (ii): starlike in the unit disk."""
    return (
        _threshold("threshold_th4_i", p, "phi1", phi1, [STARLIKE_HALF]),
        _threshold("threshold_th4_ii", p, "phi2", phi2, [STARLIKE_D]),
    )


def threshold_convex(p: WrightParams) -> tuple[CriterionReport, CriterionReport]:
    """Part (i): convex in the half disk; part (ii): starlike in the unit disk."""
    return (
        _threshold("threshold_convex_i", p, "psi1", psi1, [CONVEX_HALF]),
        _threshold("threshold_convex_ii", p, "psi2", psi2, [STARLIKE_D]),
    )


# Registry of single-report criteria keyed by id.  The pair theorems are split.
CRITERIA: dict[str, Callable[[WrightParams], CriterionReport]] = {
    "kt1_starlike": kt1_starlike,
    "kt2_convex_half": kt2_convex_half,
    "kt3_starlike_via_deriv": kt3_starlike_via_deriv,
    "kt4_starlike_half": kt4_starlike_half,
    "yyy5_ucv": yyy5_ucv,
    "threshold_starlike": threshold_starlike,
    "threshold_sp": threshold_sp,
    "threshold_th4_i": lambda p: threshold_th4(p)[0],
    "threshold_th4_ii": lambda p: threshold_th4(p)[1],
    "threshold_convex_i": lambda p: threshold_convex(p)[0],
    "threshold_convex_ii": lambda p: threshold_convex(p)[1],
}


def run_criteria(p: WrightParams, eta: Optional[float] = None) -> list:
    """Every registered criterion, plus the order-``eta`` one when asked."""
    out = [fn(p) for fn in CRITERIA.values()]
    if eta is not None:
        out.append(threshold_starlike_order(p, eta))
    return out


class Family(str, enum.Enum):
    FOUR = "four"
    CONFLUENT = "confluent"
    BESSEL = "bessel"
    TWO_PARAM = "twoparam"


def family_params(family, **kw) -> WrightParams:
    """Four-parameter representative of a named family.

    * ``confluent`` (``b``): ``z 0F1(; b; z)``, i.e. ``(1, 1, 1, b)``.
    * ``twoparam`` (``b``, ``nu``): ``(1, 1, nu, b)``.
    * ``bessel`` (``beta``): ``(1, 1, 1, beta + 1)``.  The normalized Bessel
      function is ``-W(-z)`` for this quadruple, and all the properties
      checked here are invariant under that rotation.  The quadruple
      ``(1, beta + 1, 1, 1)`` names the same function with the gamma pairs
      swapped; the b-thresholds are stated for this orientation.
    * ``four``: ``mu, a, nu, b`` given directly.
    """
    family = Family(family)
    if family is Family.CONFLUENT:
        return WrightParams(1.0, 1.0, 1.0, float(kw["b"]))
    if family is Family.TWO_PARAM:
        return WrightParams(1.0, 1.0, float(kw["nu"]), float(kw["b"]))
    if family is Family.BESSEL:
        return WrightParams(1.0, 1.0, 1.0, float(kw["beta"]) + 1.0)
    return WrightParams(float(kw["mu"]), float(kw["a"]), float(kw["nu"]), float(kw["b"]))


def family_preset(family, eta: Optional[float] = None, **kw) -> list:
    """Run all criteria on the family's representative parameters."""
    return run_criteria(family_params(family, **kw), eta=eta)


def by_id(reports, theorem_id: str) -> CriterionReport:
    for r in reports:
        if r.theorem_id == theorem_id:
            return r
    raise KeyError(theorem_id)

