"""One-dimensional parameter sweeps, threshold bisection and reproduction tables."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .criteria import (
    CRITERIA,
    CriterionReport,
    Family,
    family_params,
    phi,
    phi1,
    phi2,
    psi1,
    psi2,
    tau,
)
from .errors import DomainError, MonotonicityError
from .oracle import GridSpec, PropertyCheck, check_property, default_grid
from .properties import PropertyKind
from .series import bessel_map, wright_map

__all__ = [
    "SweepSpec",
    "SweepRow",
    "SweepResult",
    "Boundary",
    "run_sweep",
    "boundary_bisect",
    "established_intervals",
    "verify_report",
    "closed_form_boundary",
    "format_table",
    "sharpness_rows",
    "reproduction_rows",
    "BISECT_TOL",
]

BISECT_TOL = 1e-6
_MONO_SAMPLES = 16

_FAMILY_ARGS = {
    Family.FOUR: ("mu", "a", "nu", "b"),
    Family.CONFLUENT: ("b",),
    Family.BESSEL: ("beta",),
    Family.TWO_PARAM: ("b", "nu"),
}


@dataclass(frozen=True)
class SweepSpec:
    family: Family
    varying: str
    lo: float
    hi: float
    steps: int
    fixed: dict = field(default_factory=dict)
    criteria: tuple = tuple(CRITERIA)
    oracle: bool = False
    grid: Optional[GridSpec] = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        names = _FAMILY_ARGS[fam]
        if self.varying not in names:
            raise DomainError(f"{fam.value} has parameters {names}, not {self.varying!r}")
        missing = [n for n in names if n != self.varying and n not in self.fixed]
        if missing:
            raise DomainError(f"missing fixed parameter(s) {missing} for {fam.value}")
        if not self.lo < self.hi:
            raise DomainError(f"need lo < hi, got ({self.lo}, {self.hi})")
        if self.steps < 2:
            raise DomainError(f"need steps >= 2, got {self.steps}")
        unknown = [c for c in self.criteria if c not in CRITERIA]
        if unknown:
            raise DomainError(f"unknown criteria {unknown}")
        object.__setattr__(self, "criteria", tuple(self.criteria))
        # validates the fixed values against the family domain
        self.params_at(self.lo)

    def params_at(self, value: float):
        kw = dict(self.fixed)
        kw[self.varying] = value
        return family_params(self.family, **kw)

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.steps)


@dataclass(frozen=True)
class SweepRow:
    value: float
    verdicts: dict
    margins: dict

    def as_dict(self) -> dict:
        return {"value": self.value, "verdicts": self.verdicts, "margins": self.margins}


@dataclass(frozen=True)
class Boundary:
    """A verdict change of ``criterion`` at ``value``.

    ``rising`` is true when the criterion becomes Established as the
    parameter increases through ``value``.
    """

    criterion: str
    value: float
    rising: bool

    def as_dict(self) -> dict:
        return {"criterion": self.criterion, "value": self.value,
                "direction": "becomes_established" if self.rising else "stops_established"}


@dataclass(frozen=True)
class SweepResult:
    spec: SweepSpec
    rows: tuple
    boundaries: tuple

    def as_dict(self) -> dict:
        return {
            "family": self.spec.family.value,
            "varying": self.spec.varying,
            "rows": [r.as_dict() for r in self.rows],
            "boundaries": [b.as_dict() for b in self.boundaries],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def table(self) -> str:
        heads = [self.spec.varying] + list(self.spec.criteria)
        body = []
        for r in self.rows:
            body.append([f"{r.value:.6g}"] + ["E" if r.verdicts[c] == "Established" else "-"
                                              for c in self.spec.criteria])
        return format_table(heads, body)


def _established(spec: SweepSpec, criterion: str, value: float) -> bool:
    return CRITERIA[criterion](spec.params_at(value)).established


def _function_for(spec_family: Family, params, kw) :
    if spec_family is Family.BESSEL:
        return bessel_map(float(kw["beta"]))
    return wright_map(params)


def verify_report(report: CriterionReport, family=Family.FOUR, grid: Optional[GridSpec] = None,
                  **family_kw) -> list:
    """Oracle checks for every conclusion of ``report``.

    For the Bessel family the rotation-invariant properties are checked on
    the Bessel function itself; close-to-convexity is checked on the
    four-parameter representative, which is what its witness refers to.
    """
    family = Family(family)
    out: list[PropertyCheck] = []
    for c in report.conclusions:
        if family is Family.BESSEL and c.kind is not PropertyKind.CLOSE_TO_CONVEX:
            f = bessel_map(float(family_kw["beta"]))
        else:
            f = wright_map(report.params)
        g = grid if grid is None or c.region.radius == 1.0 else None
        out.append(check_property(c, f, g or default_grid(c.region.radius)))
    return out


def run_sweep(spec: SweepSpec) -> SweepResult:
    rows = []
    for v in spec.values():
        v = float(v)
        p = spec.params_at(v)
        verdicts = {}
        margins = {}
        for cid in spec.criteria:
            rep = CRITERIA[cid](p)
            verdicts[cid] = rep.verdict.value
            if spec.oracle:
                kw = dict(spec.fixed)
                kw[spec.varying] = v
                for chk, concl in zip(verify_report(rep, spec.family, spec.grid, **kw),
                                      rep.conclusions):
                    margins[concl.label] = chk.margin
        rows.append(SweepRow(v, verdicts, margins))
    boundaries = []
    for cid in spec.criteria:
        for r0, r1 in zip(rows[:-1], rows[1:]):
            if r0.verdicts[cid] != r1.verdicts[cid]:
                b = boundary_bisect(cid, spec, (r0.value, r1.value))
                boundaries.append(Boundary(cid, b, r1.verdicts[cid] == "Established"))
    return SweepResult(spec, tuple(rows), tuple(boundaries))


def boundary_bisect(criterion: str, spec: SweepSpec, bracket: Sequence[float],
                    tol: float = BISECT_TOL) -> float:
    """Locate the verdict change of ``criterion`` inside ``bracket``.

    The bracket is first sampled at a handful of interior points; if the
    verdict changes more than once there, bisection would be meaningless and
    :class:`MonotonicityError` is raised.  Returns the midpoint of the final
    bracket, whose width is at most ``tol``.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    v_lo = _established(spec, criterion, lo)
    v_hi = _established(spec, criterion, hi)
    if v_lo == v_hi:
        raise DomainError(f"{criterion} has the same verdict at both ends of [{lo}, {hi}]")
    samples = np.linspace(lo, hi, _MONO_SAMPLES + 2)
    seq = [_established(spec, criterion, float(x)) for x in samples]
    changes = sum(a != b for a, b in zip(seq[:-1], seq[1:]))
    if changes != 1:
        raise MonotonicityError(
            f"{criterion} changes verdict {changes} times on [{lo}, {hi}]; "
            f"sampled verdicts {['E' if s else '-' for s in seq]}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if _established(spec, criterion, mid) == v_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def established_intervals(result: SweepResult, criterion: str) -> list:
    """Maximal runs where ``criterion`` is Established, with bisected ends.

    An interval reaching the end of the sweep range keeps the range end.
    """
    out = []
    start = None
    rows = result.rows
    bounds = {(b.criterion, b.rising): [] for b in result.boundaries}
    for b in result.boundaries:
        bounds[(b.criterion, b.rising)].append(b.value)
    rising = iter(bounds.get((criterion, True), []))
    falling = iter(bounds.get((criterion, False), []))
    for i, r in enumerate(rows):
        est = r.verdicts[criterion] == "Established"
        if est and start is None:
            start = r.value if i == 0 else next(rising)
        if not est and start is not None:
            out.append((start, next(falling)))
            start = None
    if start is not None:
        out.append((start, rows[-1].value))
    return out


# Closed-form thresholds in b for the threshold criteria.
_B_THRESHOLDS = {
    "threshold_starlike": phi,
    "threshold_sp": tau,
    "threshold_th4_i": phi1,
    "threshold_th4_ii": phi2,
    "threshold_convex_i": psi1,
    "threshold_convex_ii": psi2,
}


def closed_form_boundary(criterion: str, family, varying: str, fixed: Optional[dict] = None):
    """Exact boundary for threshold criteria swept in ``b`` (or ``beta``)."""
    fn = _B_THRESHOLDS.get(criterion)
    family = Family(family)
    if fn is None:
        return None
    if family is Family.BESSEL and varying == "beta":
        return fn(1.0) - 1.0
    if varying == "b":
        a = 1.0 if family is not Family.FOUR else float((fixed or {})["a"])
        return fn(a)
    return None


def format_table(heads: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    cols = [list(heads)] + [list(map(str, r)) for r in rows]
    width = [max(len(r[i]) for r in cols) for i in range(len(heads))]
    lines = []
    for j, r in enumerate(cols):
        lines.append("  ".join(s.ljust(w) for s, w in zip(r, width)).rstrip())
        if j == 0:
            lines.append("  ".join("-" * w for w in width))
    return "\n".join(lines)


def sharpness_rows() -> list:
    """``(claim, new bound, earlier bound, sharper)`` for the two starlike
    comparisons with previously known bounds."""
    bessel = closed_form_boundary("threshold_starlike", Family.BESSEL, "beta")
    two = closed_form_boundary("threshold_starlike", Family.TWO_PARAM, "b")
    rows = [
        ("Bessel starlike in D, beta >=", bessel, math.sqrt(3.0)),
        ("two-parameter starlike in D (nu >= 1), b >=", two, 1.0 + math.sqrt(3.0)),
    ]
    return [(c, new, old, new < old) for c, new, old in rows]


def _interval(b: float, criterion: str) -> tuple:
    spec = SweepSpec(Family.TWO_PARAM, "nu", 0.5, 1.2, 71, {"b": b}, (criterion,))
    iv = established_intervals(run_sweep(spec), criterion)
    return iv[0] if len(iv) == 1 else tuple(iv)


def reproduction_rows() -> list:
    """Every numeric claim of the application section next to our value.

    Each row is ``(claim, stated, computed, agrees)``; ``stated`` is the
    literal value being reproduced.
    """
    s3, s89 = math.sqrt(3.0), math.sqrt(89.0)
    conf = lambda cid: closed_form_boundary(cid, Family.CONFLUENT, "b")  # noqa: E731
    bess = lambda cid: closed_form_boundary(cid, Family.BESSEL, "beta")  # noqa: E731
    rows = [
        ("confluent starlike D", 5.0 / 4.0, conf("threshold_starlike")),
        ("confluent S_p", (5 + s89) / 4, conf("threshold_sp")),
        ("confluent starlike D_1/2", (1 + math.sqrt(17.0)) / 4, conf("threshold_th4_i")),
        ("confluent convex D_1/2", 1 + s3, conf("threshold_convex_i")),
        ("Bessel starlike D", 1.5, bess("threshold_starlike")),
        ("Bessel convex D_1/2", s3, bess("threshold_convex_i")),
        ("Bessel S_p", (1 + s89) / 4, bess("threshold_sp")),
        ("two-parameter starlike D", 2.5, conf("threshold_starlike")),
        ("two-parameter convex D_1/2", 1 + s3, conf("threshold_convex_i")),
        ("two-parameter S_p", (5 + s89) / 4, conf("threshold_sp")),
    ]
    out = [(c, s, v, abs(s - v) <= 1e-12) for c, s, v in rows]
    for b, cid, stated in ((4.0, "kt2_convex_half", (0.76, 0.95)),
                           (2.0, "kt4_starlike_half", (0.645, 0.999))):
        iv = _interval(b, cid)
        ok = len(iv) == 2 and all(abs(x - y) <= 0.01 for x, y in zip(iv, stated))
        out.append((f"two-parameter b={b:g} {cid} nu-interval", stated, iv, ok))
    return out
