"""Real log-gamma and the normalized Wright coefficients.

Everything here works in log space: ``Gamma(a + k*mu)`` overflows a double
once ``k*mu`` is around 170, while the coefficient ratios we care about stay
perfectly representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["WrightParams", "log_gamma", "coeff_alpha", "log_alpha", "log_wright_coeffs"]

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_P = np.array([
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
])
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_{2n} / (2n (2n - 1)) for n = 1..6
_STIRLING = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
)
_STIRLING_CUTOFF = 12.0


def _lanczos(x):
    # valid for x >= 0.5
    xm = x - 1.0
    acc = np.full_like(xm, _LANCZOS_P[0])
    for i in range(1, len(_LANCZOS_P)):
        acc = acc + _LANCZOS_P[i] / (xm + i)
    t = xm + _LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (xm + 0.5) * np.log(t) - t + np.log(acc)


def _stirling(x):
    inv = 1.0 / x
    inv2 = inv * inv
    corr = np.zeros_like(x)
    for c in reversed(_STIRLING):
        corr = corr * inv2 + c
    return (x - 0.5) * np.log(x) - x + _HALF_LOG_2PI + corr * inv


def log_gamma(x):
    """Natural log of the gamma function for positive real arguments.

    Accepts a scalar or an array; a scalar input returns a Python float.
    Raises :class:`DomainError` for non-positive (or NaN) arguments.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(arr > 0):
        raise DomainError(f"log_gamma needs x > 0, got {x!r}")
    out = np.empty_like(arr)
    big = arr > _STIRLING_CUTOFF
    mid = (~big) & (arr >= 0.5)
    small = arr < 0.5
    if np.any(big):
        out[big] = _stirling(arr[big])
    if np.any(mid):
        out[mid] = _lanczos(arr[mid])
    if np.any(small):
        # Gamma(x) = Gamma(x + 1) / x keeps the Lanczos sum in its accurate range
        xs = arr[small]
        out[small] = _lanczos(xs + 1.0) - np.log(xs)
    out[(arr == 1.0) | (arr == 2.0)] = 0.0
    if out.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class WrightParams:
    """The quadruple ``(mu, a, nu, b)`` of the four-parameter Wright function.

    The library core requires ``a, b > 0``, ``mu, nu >= 0`` and ``mu + nu > 0``,
    so every gamma argument ``a + k*mu`` and ``b + k*nu`` is positive and the
    series is entire.
    """

    mu: float
    a: float
    nu: float
    b: float

    def __post_init__(self):
        for name in ("mu", "a", "nu", "b"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v!r}")
        if self.a <= 0 or self.b <= 0:
            raise DomainError(f"need a > 0 and b > 0, got a={self.a}, b={self.b}")
        if self.mu < 0 or self.nu < 0:
            raise DomainError(f"need mu >= 0 and nu >= 0, got mu={self.mu}, nu={self.nu}")
        if self.mu + self.nu <= 0:
            raise DomainError("need mu + nu > 0 for absolute convergence")

    def swapped(self) -> WrightParams:
        """The same function with the two gamma pairs exchanged."""
        return WrightParams(self.nu, self.b, self.mu, self.a)

    def as_dict(self) -> dict:
        return {"mu": self.mu, "a": self.a, "nu": self.nu, "b": self.b}


def log_wright_coeffs(p: WrightParams, kmax: int) -> np.ndarray:
    """``-log Gamma(a + k mu) - log Gamma(b + k nu)`` for ``k = 0..kmax``."""
    k = np.arange(kmax + 1, dtype=float)
    return -log_gamma(p.a + k * p.mu) - log_gamma(p.b + k * p.nu)


def log_alpha(p: WrightParams, kmax: int) -> np.ndarray:
    """``log alpha_k`` for ``k = 0..kmax``; entry 0 is exactly zero."""
    out = log_wright_coeffs(p, kmax)
    out = out - out[0]
    out[0] = 0.0
    return out


def coeff_alpha(p: WrightParams, k: int) -> float:
    """Normalized coefficient ``Gamma(a)Gamma(b) / (Gamma(a+k mu) Gamma(b+k nu))``."""
    if k < 0 or int(k) != k:
        raise DomainError(f"k must be a non-negative integer, got {k!r}")
    if k == 0:
        return 1.0
    return math.exp(
        log_gamma(p.a) + log_gamma(p.b)
        - log_gamma(p.a + k * p.mu) - log_gamma(p.b + k * p.nu)
    )
