"""Zeros of partial sums: Enestrom-Kakeya test and simultaneous root finding.

Roots come from the Ehrlich-Aberth iteration started at Newton-polygon
points (one circle per edge of the upper convex hull of ``(k, log|c_k|)``).
The partial-sum coefficients here decay super-exponentially, so the root
moduli span many orders of magnitude and a single starting circle would
stall; the hull places each cluster of starting points at the right scale.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, DomainError
from .gamma import WrightParams
from .series import partial_sum_coefficients

__all__ = [
    "PolySource",
    "PolyCoeffs",
    "RootsReport",
    "ExteriorReport",
    "partial_sum_coeffs",
    "kakeya_applicable",
    "find_roots",
    "verify_exterior",
    "MAX_ITER",
    "STEP_TOL",
]

MAX_ITER = 200
STEP_TOL = 1e-12
_EPS = np.finfo(float).eps


class PolySource(str, enum.Enum):
    RAW = "RawPartialSum"
    NORMALIZED = "NormalizedPartialSum"
    QFACTOR = "QFactor"
    EXPLICIT = "Explicit"

    @classmethod
    def parse(cls, value) -> PolySource:
        aliases = {"raw": cls.RAW, "normalized": cls.NORMALIZED, "qfactor": cls.QFACTOR}
        if isinstance(value, str) and value.lower() in aliases:
            return aliases[value.lower()]
        return cls(value)


@dataclass(frozen=True)
class PolyCoeffs:
    """Ascending coefficients ``c_0..c_N``; trailing zeros are trimmed."""

    coeffs: tuple
    source: PolySource = PolySource.EXPLICIT

    def __post_init__(self):
        c = [float(x) for x in self.coeffs]
        if not all(math.isfinite(x) for x in c):
            raise DomainError("polynomial coefficients must be finite")
        while c and c[-1] == 0.0:
            c.pop()
        if not c:
            raise DomainError("the zero polynomial has no well-defined roots")
        object.__setattr__(self, "coeffs", tuple(c))
        object.__setattr__(self, "source", PolySource.parse(self.source))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def array(self) -> np.ndarray:
        return np.array(self.coeffs)


@dataclass(frozen=True)
class RootsReport:
    """Roots sorted by ``(modulus, argument)``.

    ``residual_max`` is the largest backward error
    ``|p(r)| / sum_k |c_k| |r|^k`` over the roots.  ``zero_roots`` counts
    roots at the origin that were split off (the constant term of the
    normalized partial sum is zero); ``min_modulus`` is over the others.
    """

    roots: tuple
    min_modulus: float
    kakeya_applicable: bool
    residual_max: float
    iterations: int
    vieta_sum_error: float
    vieta_product_error: float
    zero_roots: int = 0

    def as_dict(self) -> dict:
        return {
            "roots": [{"re": r.real, "im": r.imag} for r in self.roots],
            "min_modulus": self.min_modulus,
            "kakeya_applicable": self.kakeya_applicable,
            "residual_max": self.residual_max,
            "iterations": self.iterations,
            "vieta_sum_error": self.vieta_sum_error,
            "vieta_product_error": self.vieta_product_error,
            "zero_roots": self.zero_roots,
        }


@dataclass(frozen=True)
class ExteriorReport:
    report: RootsReport
    verdict: bool
    preconditions: tuple = field(default=())

    @property
    def theorem_applies(self) -> bool:
        return all(ok for _, ok in self.preconditions)

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "theorem_applies": self.theorem_applies,
            "preconditions": [{"name": n, "holds": ok} for n, ok in self.preconditions],
            **self.report.as_dict(),
        }


def partial_sum_coeffs(p: WrightParams, N: int, which) -> PolyCoeffs:
    source = PolySource.parse(which)
    key = {PolySource.RAW: "raw", PolySource.NORMALIZED: "normalized",
           PolySource.QFACTOR: "qfactor"}.get(source)
    if key is None:
        raise DomainError(f"{source.value} is not a partial-sum kind")
    return PolyCoeffs(tuple(partial_sum_coefficients(p, N, key)), source)


def kakeya_applicable(c: PolyCoeffs) -> bool:
    """``c_0 > c_1 > ... > c_N > 0``; then every zero lies in ``|z| > 1``."""
    a = c.array()
    return bool(np.all(a > 0) and np.all(np.diff(a) < 0))


# --- root finding ----------------------------------------------------------


def _upper_hull(x: np.ndarray, y: np.ndarray) -> list:
    hull: list = []
    for i in range(len(x)):
        if not np.isfinite(y[i]):
            continue
        while len(hull) >= 2:
            i0, i1 = hull[-2], hull[-1]
            # drop i1 if it lies on or below the chord i0 -> i
            if (y[i1] - y[i0]) * (x[i] - x[i0]) <= (y[i] - y[i0]) * (x[i1] - x[i0]):
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def _initial_points(c: np.ndarray) -> np.ndarray:
    n = len(c) - 1
    with np.errstate(divide="ignore"):
        logc = np.log(np.abs(c))
    hull = _upper_hull(np.arange(n + 1, dtype=float), logc)
    pts = []
    sigma = 0.7  # fixed offset breaking the symmetry with the real axis
    for i, j in zip(hull[:-1], hull[1:]):
        m = j - i
        u = math.exp((logc[i] - logc[j]) / m)
        ang = 2.0 * math.pi * np.arange(m) / m + 2.0 * math.pi * i / n + sigma
        pts.append(u * np.exp(1j * ang))
    return np.concatenate(pts)


def _newton_and_backward(c: np.ndarray, z: np.ndarray):
    """Newton correction ``p/p'`` and backward error at each point.

    Points outside the unit circle use the reversed polynomial in ``1/z`` so
    that nothing overflows for high degree and large roots.
    """
    n = len(c) - 1
    out_nc = np.empty_like(z)
    out_be = np.empty(z.shape)
    inside = np.abs(z) <= 1.0
    for mask, coeffs, pts in ((inside, c, z), (~inside, c[::-1], None)):
        if not np.any(mask):
            continue
        w = z[mask] if pts is not None else 1.0 / z[mask]
        acoef = np.abs(coeffs)
        p = np.zeros_like(w)
        dp = np.zeros_like(w)
        s = np.zeros(w.shape)
        aw = np.abs(w)
        for ck, ak in zip(coeffs[::-1], acoef[::-1]):
            dp = dp * w + p
            p = p * w + ck
            s = s * aw + ak
        out_be[mask] = np.abs(p) / s
        if pts is not None:
            with np.errstate(divide="ignore", invalid="ignore"):
                out_nc[mask] = p / dp
        else:
            # p(z) = z^n prev(w), so p/p' = z / (n - w prev'(w)/prev(w))
            with np.errstate(divide="ignore", invalid="ignore"):
                out_nc[mask] = z[mask] / (n - w * dp / p)
    return out_nc, out_be


def _aberth(c: np.ndarray) -> tuple[np.ndarray, int]:
    z = _initial_points(c)
    n = len(z)
    done = np.zeros(n, dtype=bool)
    for it in range(1, MAX_ITER + 1):
        nc, be = _newton_and_backward(c, z)
        done |= be <= 4.0 * _EPS
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        inv = 1.0 / diff
        np.fill_diagonal(inv, 0.0)
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            w = nc / (1.0 - nc * s)
        w = np.where(np.isfinite(w), w, 0.0)
        small = np.abs(w) <= STEP_TOL * np.abs(z)
        step = ~done
        z = np.where(step, z - w, z)
        done |= small
        if np.all(done):
            return z, it
    raise ConvergenceError(f"Aberth iteration did not converge in {MAX_ITER} iterations",
                           partial=np.sort_complex(z))


def _sort_roots(r: np.ndarray) -> np.ndarray:
    r = np.asarray(r, dtype=complex)
    # clean up signed zeros so the sort key is stable
    r = np.where(r.imag == 0.0, r.real + 0j, r)
    order = np.lexsort((np.angle(r), np.abs(r)))
    return r[order]


def _vieta(c: np.ndarray, r: np.ndarray) -> tuple[float, float]:
    n = len(c) - 1
    s_true = -c[n - 1] / c[n]
    scale = max(abs(s_true), float(np.max(np.abs(r))))
    sum_err = abs(np.sum(r) - s_true) / scale
    # product compared through logs to stay clear of overflow
    p_true = (-1) ** n * c[0] / c[n]
    lr = np.sum(np.log(r.astype(complex))) - np.log(complex(p_true))
    prod_err = abs(np.expm1(lr))
    return float(sum_err), float(prod_err)


def find_roots(c: PolyCoeffs) -> RootsReport:
    """All complex roots of ``c``, with zero roots at the origin split off."""
    a = c.array()
    if c.degree < 1:
        raise DomainError("find_roots needs degree >= 1")
    nz = 0
    while a[0] == 0.0:
        a = a[1:]
        nz += 1
    if len(a) == 1:
        roots = np.zeros(0, dtype=complex)
        iters = 0
    elif len(a) == 2:
        roots = np.array([-a[0] / a[1]], dtype=complex)
        iters = 0
    else:
        roots, iters = _aberth(a)
    roots = _sort_roots(roots)
    if len(roots):
        _, be = _newton_and_backward(a.astype(complex), roots)
        residual = float(np.max(be))
        min_mod = float(np.min(np.abs(roots)))
        vs, vp = _vieta(a, roots)
    else:
        residual, min_mod, vs, vp = 0.0, math.inf, 0.0, 0.0
    all_roots = np.concatenate([np.zeros(nz, dtype=complex), roots])
    return RootsReport(tuple(complex(x) for x in all_roots), min_mod, kakeya_applicable(c),
                       residual, iters, vs, vp, nz)


def _preconditions(p: WrightParams, source: PolySource) -> tuple:
    if source is PolySource.RAW:
        return (("a = 1", p.a == 1.0), ("b = 1", p.b == 1.0),
                ("mu > 1", p.mu > 1.0), ("nu > 1", p.nu > 1.0))
    return (("a > 1", p.a > 1.0), ("b > 1", p.b > 1.0),
            ("mu >= 1", p.mu >= 1.0), ("nu >= 1", p.nu >= 1.0))


def verify_exterior(p: WrightParams, N: int, which) -> ExteriorReport:
    """Do all (nonzero) zeros of the partial sum lie outside the closed unit disk?

    ``verdict`` is the numerical answer ``min_modulus > 1``; the theorem's
    hypotheses are reported separately in ``preconditions``.
    """
    c = partial_sum_coeffs(p, N, which)
    rep = find_roots(c)
    return ExteriorReport(rep, rep.min_modulus > 1.0, _preconditions(p, c.source))
