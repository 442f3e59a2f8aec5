"""Grid oracle: sample the disk and look for violations of a geometric property.

The oracle is falsification-grade.  ``NoViolationFound`` means no sampled
point broke the defining inequality after subtracting the certified series
truncation error; it is not a proof, since the conditions are open and only
finitely many points are visited.

Functions are anything with ``evaluate(z, order) -> (values, tail_bound)``,
the interface of :class:`~wrightfn.series.SeriesFunction`.  Closed forms used
as sanity references live in :class:`ClosedForm`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .errors import DomainError
from .gamma import WrightParams
from .properties import PropertyKind, PropertyRegion, Region
from .series import partial_sum_map, raw_wright_map, wright_map

__all__ = [
    "Spacing",
    "GridSpec",
    "default_grid",
    "OracleVerdict",
    "PropertyCheck",
    "SequenceSpec",
    "ClosedForm",
    "IDENTITY",
    "KOEBE",
    "HALF_PLANE_MAP",
    "check_starlike",
    "check_convex",
    "check_ucv",
    "check_sp",
    "check_close_to_convex",
    "check_half_plane",
    "check_subordinating_sequence",
    "DeviationMode",
    "check_bound_deviation",
    "check_convex_decreasing",
    "check_property",
    "ORACLE_NOTE",
]

ORACLE_NOTE = "falsification-grade: grid sampling, not a proof"


class Spacing(str, enum.Enum):
    UNIFORM = "uniform"
    BOUNDARY_CLUSTERED = "boundary_clustered"


@dataclass(frozen=True)
class GridSpec:
    """Polar grid ``r_i e^{i theta_j}`` with ``0 < r_i <= r_max``.

    Boundary-clustered radii are ``r_max sin(pi i / (2 n))``, ``i = 1..n``,
    so points pile up near ``|z| = r_max`` where these properties are
    decided.  Angles are ``2 pi j / n_angles``; the centre is handled by each
    check through its analytic limit.
    """

    r_max: float
    n_radii: int = 64
    n_angles: int = 256
    radial_spacing: Spacing = Spacing.BOUNDARY_CLUSTERED

    def __post_init__(self):
        if not 0.0 < self.r_max < 1.0:
            raise DomainError(f"r_max must lie in (0, 1), got {self.r_max}")
        if self.n_radii < 2:
            raise DomainError(f"n_radii must be >= 2, got {self.n_radii}")
        if self.n_angles < 8:
            raise DomainError(f"n_angles must be >= 8, got {self.n_angles}")
        object.__setattr__(self, "radial_spacing", Spacing(self.radial_spacing))

    def radii(self) -> np.ndarray:
        i = np.arange(1, self.n_radii + 1, dtype=float)
        if self.radial_spacing is Spacing.UNIFORM:
            return self.r_max * i / self.n_radii
        return self.r_max * np.sin(0.5 * np.pi * i / self.n_radii)

    def angles(self) -> np.ndarray:
        return 2.0 * np.pi * np.arange(self.n_angles) / self.n_angles

    def points(self) -> np.ndarray:
        """Grid points, shape ``(n_radii, n_angles)``."""
        return self.radii()[:, None] * np.exp(1j * self.angles())[None, :]

    def refined(self) -> GridSpec:
        return GridSpec(self.r_max, 2 * self.n_radii, 2 * self.n_angles, self.radial_spacing)

    def as_dict(self) -> dict:
        return {"r_max": self.r_max, "n_radii": self.n_radii, "n_angles": self.n_angles,
                "radial_spacing": self.radial_spacing.value}


def default_grid(region_radius: float = 1.0, n_radii: int = 64, n_angles: int = 256) -> GridSpec:
    return GridSpec(region_radius - 1e-3, n_radii, n_angles)


class OracleVerdict(str, enum.Enum):
    NO_VIOLATION = "NoViolationFound"
    VIOLATION = "ViolationFound"


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of one grid check; ``ViolationFound`` iff ``margin < 0``.

    ``extremal_value`` is the raw grid extremum of the defining quantity;
    ``margin`` additionally absorbs the truncation error allowance
    ``error_bound``.
    """

    property: Union[PropertyRegion, str]
    grid: GridSpec
    extremal_value: float
    extremal_point: complex
    margin: float
    error_bound: float = 0.0
    note: str = field(default=ORACLE_NOTE, compare=False)

    @property
    def verdict(self) -> OracleVerdict:
        return OracleVerdict.VIOLATION if self.margin < 0 else OracleVerdict.NO_VIOLATION

    @property
    def ok(self) -> bool:
        return self.verdict is OracleVerdict.NO_VIOLATION

    def as_dict(self) -> dict:
        prop = self.property.as_dict() if isinstance(self.property, PropertyRegion) else self.property
        return {
            "property": prop,
            "grid": self.grid.as_dict(),
            "extremal_value": self.extremal_value,
            "extremal_point": {"re": self.extremal_point.real, "im": self.extremal_point.imag},
            "margin": self.margin,
            "error_bound": self.error_bound,
            "verdict": self.verdict.value,
            "note": self.note,
        }


@dataclass(frozen=True)
class SequenceSpec:
    """A real sequence ``gamma_k`` for ``k = start, start+1, ...``.

    Either a finite list (``gamma`` a sequence) or a callable ``k -> gamma_k``
    truncated at ``cap`` terms.  For the callable case the terms beyond the
    cap are assumed non-increasing in modulus, which is what makes the tail
    bound ``|gamma_cap| r^(cap+1) / (1 - r)`` valid.
    """

    gamma: Union[Sequence[float], Callable[[int], float]]
    cap: int = 64
    start: int = 1

    def __post_init__(self):
        if callable(self.gamma) and self.cap < 8:
            raise DomainError(f"truncation cap must be >= 8, got {self.cap}")

    @property
    def unbounded(self) -> bool:
        return callable(self.gamma)

    def values(self) -> np.ndarray:
        if self.unbounded:
            return np.array([float(self.gamma(k)) for k in range(self.start, self.start + self.cap)])
        return np.asarray(self.gamma, dtype=float)


class ClosedForm:
    """A map given by explicit formulas for ``f``, ``f'``, ``f''``."""

    def __init__(self, name: str, f, df, d2f):
        self.name = name
        self._fns = (f, df, d2f)

    def evaluate(self, z, order: int = 0):
        z = np.asarray(z, dtype=complex)
        return self._fns[order](z), 0.0

    def __call__(self, z):
        return self.evaluate(z)[0]

    def __repr__(self):
        return f"ClosedForm({self.name})"


IDENTITY = ClosedForm("z", lambda z: z, np.ones_like, np.zeros_like)
KOEBE = ClosedForm("z/(1-z)^2", lambda z: z / (1 - z) ** 2,
                   lambda z: (1 + z) / (1 - z) ** 3, lambda z: (2 * z + 4) / (1 - z) ** 4)
HALF_PLANE_MAP = ClosedForm("z/(1-z)", lambda z: z / (1 - z),
                            lambda z: 1 / (1 - z) ** 2, lambda z: 2 / (1 - z) ** 3)


# --- helpers ---------------------------------------------------------------


def _eval(f, z, order):
    vals, tail = f.evaluate(z, order)
    return np.asarray(vals, dtype=complex), float(tail)


def _quotient(num, tn, den, td, scale):
    """``scale * num / den`` and a bound on its error when ``num`` and ``den``
    carry absolute errors ``tn`` and ``td``.

    Points where ``|den| <= td`` cannot be bounded and get an infinite error.
    """
    q = scale * num / den
    aden = np.abs(den)
    with np.errstate(divide="ignore", invalid="ignore"):
        err = np.abs(scale) * (tn * aden + np.abs(num) * td) / (aden * (aden - td))
    err = np.where(aden > td, err, np.inf)
    return q, err


def _argmin(vals):
    idx = np.unravel_index(np.argmin(vals), vals.shape)
    return idx


def _check_normalized(f):
    v0, _ = _eval(f, np.zeros(1), 0)
    d0, _ = _eval(f, np.zeros(1), 1)
    if abs(v0[0]) > 1e-14 or abs(d0[0] - 1.0) > 1e-12:
        raise DomainError(f"{f!r} is not normalized: f(0)={v0[0]}, f'(0)={d0[0]}")


def _min_check(prop, grid, z, value, err, offset=0.0):
    """Lower-bound property ``value > offset``; ``err`` is the per-point
    error allowance."""
    idx = _argmin(value)
    lower = value - err
    margin = float(np.min(lower)) - offset
    if not np.isfinite(margin):
        margin = -math.inf
    return PropertyCheck(prop, grid, float(value[idx]), complex(z[idx]), margin,
                         float(np.max(err)))


def _max_check(prop, grid, z, value, err, threshold):
    idx = np.unravel_index(np.argmax(value), value.shape)
    upper = value + err
    margin = threshold - float(np.max(upper))
    if not np.isfinite(margin):
        margin = -math.inf
    return PropertyCheck(prop, grid, float(value[idx]), complex(z[idx]), margin,
                         float(np.max(err)))


def _with_centre(z, *arrays_and_values):
    """Append the centre ``z = 0`` as an extra column with given limit values."""
    z = np.concatenate([z, np.zeros((z.shape[0], 1), dtype=complex)], axis=1)
    out = [z]
    for arr, centre in arrays_and_values:
        col = np.full((arr.shape[0], 1), centre, dtype=arr.dtype)
        out.append(np.concatenate([arr, col], axis=1))
    return out


def _vanishing(prop, grid, z, f0, t0):
    # a starlike map has no zeros in the punctured disk
    bad = np.abs(f0) <= t0
    if np.any(bad):
        idx = tuple(np.argwhere(bad)[0])
        return PropertyCheck(prop, grid, -math.inf, complex(z[idx]), -math.inf, math.inf,
                             note=f"{ORACLE_NOTE}; f vanishes (within tail bound) near {z[idx]}")
    return None


# --- property checks -------------------------------------------------------


def check_starlike(f, region_radius: float = 1.0, grid: Optional[GridSpec] = None,
                   eta: float = 0.0) -> PropertyCheck:
    """``min Re(z f'/f) - eta`` over the grid (value 1 at the centre)."""
    if not 0.0 <= eta < 1.0:
        raise DomainError(f"eta must lie in [0, 1), got {eta}")
    grid = grid or default_grid(region_radius)
    region = Region.FULL if region_radius >= 1.0 else Region.HALF
    if eta:
        prop = PropertyRegion(PropertyKind.STARLIKE_ORDER, region, eta=eta)
    else:
        prop = PropertyRegion(PropertyKind.STARLIKE, region)
    z = grid.points()
    f0, t0 = _eval(f, z, 0)
    vanish = _vanishing(prop, grid, z, f0, t0)
    if vanish is not None:
        return vanish
    f1, t1 = _eval(f, z, 1)
    q, err = _quotient(f1, t1, f0, t0, z)
    z, re, err = _with_centre(z, (q.real, 1.0), (err, 0.0))
    return _min_check(prop, grid, z, re, err, eta)


def check_convex(f, region_radius: float = 1.0, grid: Optional[GridSpec] = None) -> PropertyCheck:
    """``min Re(1 + z f''/f')`` over the grid (value 1 at the centre)."""
    grid = grid or default_grid(region_radius)
    region = Region.FULL if region_radius >= 1.0 else Region.HALF
    prop = PropertyRegion(PropertyKind.CONVEX, region)
    z = grid.points()
    f1, t1 = _eval(f, z, 1)
    f2, t2 = _eval(f, z, 2)
    q, err = _quotient(f2, t2, f1, t1, z)
    z, re, err = _with_centre(z, (1.0 + q.real, 1.0), (err, 0.0))
    return _min_check(prop, grid, z, re, err)


def check_ucv(f, grid: Optional[GridSpec] = None) -> PropertyCheck:
    """``1/2 - max |z f''/f'|`` (the sufficient UCV condition)."""
    grid = grid or default_grid(1.0)
    prop = PropertyRegion(PropertyKind.UCV)
    z = grid.points()
    f1, t1 = _eval(f, z, 1)
    f2, t2 = _eval(f, z, 2)
    q, err = _quotient(f2, t2, f1, t1, z)
    return _max_check(prop, grid, z, np.abs(q), err, 0.5)


def check_sp(f, grid: Optional[GridSpec] = None) -> PropertyCheck:
    """``1/2 - max |z f'/f - 1|`` (the sufficient S_p condition)."""
    grid = grid or default_grid(1.0)
    prop = PropertyRegion(PropertyKind.SP)
    z = grid.points()
    f0, t0 = _eval(f, z, 0)
    vanish = _vanishing(prop, grid, z, f0, t0)
    if vanish is not None:
        return vanish
    f1, t1 = _eval(f, z, 1)
    q, err = _quotient(f1, t1, f0, t0, z)
    return _max_check(prop, grid, z, np.abs(q - 1.0), err, 0.5)


def check_close_to_convex(f, g, grid: Optional[GridSpec] = None,
                          witness: Optional[WrightParams] = None) -> PropertyCheck:
    """``min Re(z f'/g)`` for a normalized witness ``g`` (value 1 at the centre)."""
    _check_normalized(f)
    _check_normalized(g)
    grid = grid or default_grid(1.0)
    if witness is not None:
        prop = PropertyRegion(PropertyKind.CLOSE_TO_CONVEX, witness=witness)
    else:
        prop = f"CloseToConvex(witness={g!r})"
    z = grid.points()
    f1, t1 = _eval(f, z, 1)
    g0, tg = _eval(g, z, 0)
    q, err = _quotient(f1, t1, g0, tg, z)
    z, re, err = _with_centre(z, (q.real, 1.0), (err, 0.0))
    return _min_check(prop, grid, z, re, err)


def check_half_plane(p: WrightParams, grid: Optional[GridSpec] = None,
                     N: Optional[int] = None) -> PropertyCheck:
    """``min Re W(z) - 1/2`` for the unnormalized function with ``a = b = 1``,
    or for its ``N``-th partial sum."""
    if p.a != 1.0 or p.b != 1.0:
        raise DomainError(f"the half-plane check needs a = b = 1, got a={p.a}, b={p.b}")
    grid = grid or default_grid(1.0)
    f = raw_wright_map(p) if N is None else partial_sum_map(p, N, "raw")
    z = grid.points()
    w, t = _eval(f, z, 0)
    z, re = _with_centre(z, (w.real, 1.0))
    err = np.full(re.shape, t)
    label = "HalfPlaneRe" if N is None else f"HalfPlaneRe(N={N})"
    return _min_check(label, grid, z, re, err, 0.5)


def check_subordinating_sequence(s: SequenceSpec, grid: Optional[GridSpec] = None) -> PropertyCheck:
    """``min Re(1 + 2 sum gamma_k z^k)`` over the grid."""
    grid = grid or default_grid(1.0)
    gam = s.values()
    c = np.zeros(s.start + len(gam))
    c[s.start:] = gam
    c *= 2.0
    c[0] += 1.0
    z = grid.points()
    vals = np.polynomial.polynomial.polyval(z, c)
    tail = 0.0
    if s.unbounded and len(gam):
        r = grid.r_max
        tail = 2.0 * abs(gam[-1]) * r ** (s.start + len(gam)) / (1.0 - r)
    z, re = _with_centre(z, (vals.real, 1.0))
    return _min_check("SubordinatingFactorSequence", grid, z, re, np.full(re.shape, tail))


class DeviationMode(str, enum.Enum):
    F_OVER_Z = "f_over_z_minus_1"
    FPRIME = "fprime_minus_1"



def check_bound_deviation(f, mode, threshold: float, grid: Optional[GridSpec] = None,
                          region_radius: float = 1.0) -> PropertyCheck:
    """``threshold - max |f(z)/z - 1|`` or ``threshold - max |f'(z) - 1|``."""
    mode = DeviationMode(mode)
    grid = grid or default_grid(region_radius)
    z = grid.points()
    if mode is DeviationMode.F_OVER_Z:
        f0, t0 = _eval(f, z, 0)
        dev = np.abs(f0 / z - 1.0)
        err = t0 / np.abs(z)
    else:
        f1, t1 = _eval(f, z, 1)
        dev = np.abs(f1 - 1.0)
        err = np.full(dev.shape, t1)
    return _max_check(f"Deviation({mode.value} < {threshold:g})", grid, z, dev, err, threshold)


def check_convex_decreasing(seq: SequenceSpec) -> bool:
    """``0 >= a_{k+2} - a_{k+1} >= a_{k+1} - a_k`` for every ``k`` in range."""
    a = seq.values()
    d = np.diff(a)
    return bool(np.all(d <= 0) and np.all(np.diff(d) >= 0))


def check_property(prop: PropertyRegion, f, grid: Optional[GridSpec] = None) -> PropertyCheck:
    """Dispatch on a :class:`PropertyRegion`.  Close-to-convexity uses the
    normalized Wright function of the stored witness parameters."""
    r = prop.region.radius
    if grid is None:
        grid = default_grid(r)
    kind = prop.kind
    if kind is PropertyKind.STARLIKE:
        return check_starlike(f, r, grid)
    if kind is PropertyKind.STARLIKE_ORDER:
        return check_starlike(f, r, grid, prop.eta)
    if kind is PropertyKind.CONVEX:
        return check_convex(f, r, grid)
    if kind is PropertyKind.UCV:
        return check_ucv(f, grid)
    if kind is PropertyKind.SP:
        return check_sp(f, grid)
    if kind is PropertyKind.CLOSE_TO_CONVEX:
        return check_close_to_convex(f, wright_map(prop.witness), grid, witness=prop.witness)
    raise DomainError(f"no oracle dispatch for {prop.label}")
