"""Series evaluation with certified truncation.

Every series here is a power series ``sum_k c_k z^(k + shift)`` whose
coefficients are held in log space.  Truncation uses a geometric majorant:
after keeping terms ``0..n`` the discarded tail is bounded by
``t_n * rho / (1 - rho)``, where ``t_n = |c_n| r^(n+shift)`` and ``rho``
bounds every later term ratio ``t_{j+1}/t_j`` (``j >= n``).  For the Wright
families the coefficient ratio ``alpha_{k+1}/alpha_k`` is non-increasing in
``k`` (log-convexity of Gamma), so the ratio at ``n`` is already the supremum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DomainError, TruncationError
from .gamma import WrightParams, log_alpha, log_gamma, log_wright_coeffs

__all__ = [
    "K_MAX",
    "SeriesValue",
    "Wright2Params",
    "FoxWrightSpec",
    "PowerSeries",
    "SeriesFunction",
    "eval_wright2",
    "eval_wright4",
    "eval_normalized",
    "eval_normalized_deriv",
    "eval_fox_wright",
    "eval_1F2",
    "partial_sum",
    "partial_sum_coefficients",
    "bessel_normalized",
    "two_param_normalized",
    "wright_map",
    "raw_wright_map",
    "bessel_map",
    "two_param_map",
    "partial_sum_map",
]

K_MAX = 500
DEFAULT_TOL = 1e-12


@dataclass(frozen=True)
class SeriesValue:
    """A series value with the number of terms kept and a bound on the discarded tail."""

    value: complex
    terms_used: int
    tail_bound: float

    def as_dict(self) -> dict:
        v = complex(self.value)
        return {
            "value": {"re": v.real, "im": v.imag},
            "terms_used": self.terms_used,
            "tail_bound": self.tail_bound,
        }


@dataclass(frozen=True)
class Wright2Params:
    """Parameters of the classical Wright function ``W_{alpha,beta}``."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise DomainError("alpha and beta must be finite")
        if self.alpha < 0:
            raise DomainError(f"alpha >= 0 required, got {self.alpha}")
        if self.beta <= 0:
            raise DomainError(f"beta > 0 required, got {self.beta}")


@dataclass(frozen=True)
class FoxWrightSpec:
    """Upper pairs ``(a_i, A_i)`` and lower pairs ``(b_j, B_j)`` of a Fox-Wright function."""

    upper: tuple
    lower: tuple

    def __post_init__(self):
        up = tuple((float(a), float(A)) for a, A in self.upper)
        lo = tuple((float(b), float(B)) for b, B in self.lower)
        object.__setattr__(self, "upper", up)
        object.__setattr__(self, "lower", lo)
        for a, A in up + lo:
            if not (math.isfinite(a) and math.isfinite(A)):
                raise DomainError("Fox-Wright parameters must be finite")
            if A <= 0:
                raise DomainError(f"scale parameters must be positive, got {A}")
            if a <= 0:
                # with A > 0 the smallest gamma argument is at k = 0
                raise DomainError(f"gamma argument {a} at k=0 is not positive")
        if self.epsilon <= 0:
            raise DomainError(f"convergence index epsilon = {self.epsilon} must be positive")

    @property
    def epsilon(self) -> float:
        return 1.0 + sum(B for _, B in self.lower) - sum(A for _, A in self.upper)

    def log_coeffs(self, kmax: int, with_factorial: bool = True) -> np.ndarray:
        k = np.arange(kmax + 1, dtype=float)
        out = np.zeros(kmax + 1)
        for a, A in self.upper:
            out += log_gamma(a + k * A)
        for b, B in self.lower:
            out -= log_gamma(b + k * B)
        if with_factorial:
            out -= log_gamma(k + 1.0)
        return out


class PowerSeries:
    """``sum_k c_k z^(k + shift)`` with ``c_k = sign_k * exp(logc_k)``.

    ``ratio_sup[k]`` must bound ``|c_{j+1}/c_j|`` for every ``j >= k``.  A
    ``finite`` series is a polynomial: all stored terms are kept and the tail
    is zero.
    """

    def __init__(self, logc, sign=None, shift=0, ratio_sup=None, finite=False):
        self.logc = np.asarray(logc, dtype=float)
        self.sign = np.ones_like(self.logc) if sign is None else np.asarray(sign, dtype=float)
        self.shift = int(shift)
        self.finite = finite
        if ratio_sup is None and not finite:
            ratio_sup = _suffix_sup_ratio(self.logc)
        self.ratio_sup = ratio_sup

    @property
    def coeffs(self) -> np.ndarray:
        return self.sign * np.exp(self.logc)

    def derivative(self) -> PowerSeries:
        k = np.arange(len(self.logc), dtype=float)
        power = k + self.shift
        if self.shift == 0:
            # constant term differentiates away; re-index from k = 1
            logc = self.logc[1:] + np.log(power[1:])
            sign = self.sign[1:]
            ratio = None
            if self.ratio_sup is not None:
                kk = k[1:len(self.ratio_sup)]
                ratio = self.ratio_sup[1:] * (kk + 1.0) / kk
            return PowerSeries(logc, sign, 0, ratio, self.finite)
        logc = self.logc + np.log(power)
        ratio = None
        if self.ratio_sup is not None:
            pk = power[:len(self.ratio_sup)]
            ratio = self.ratio_sup * (pk + 1.0) / pk
        return PowerSeries(logc, self.sign, self.shift - 1, ratio, self.finite)

    def truncation(self, r: float, tol: float) -> tuple[int, float]:
        """Number of terms to keep for ``|z| <= r`` and the certified tail bound."""
        n = len(self.logc)
        if self.finite:
            return n, 0.0
        if not tol > 0:
            raise DomainError(f"tol must be positive, got {tol}")
        if r == 0.0:
            return 1, 0.0
        m = len(self.ratio_sup)
        k = np.arange(m, dtype=float)
        with np.errstate(over="ignore", under="ignore", divide="ignore", invalid="ignore"):
            logt = self.logc[:m] + (k + self.shift) * math.log(r)
            rho = self.ratio_sup * r
            tail = np.where(rho < 1.0, np.exp(logt) * rho / (1.0 - rho), np.inf)
        ok = np.nonzero(tail <= tol)[0]
        if ok.size == 0:
            raise TruncationError(
                f"tail not below tol={tol:g} within {m} terms at |z|={r:g}"
            )
        i = int(ok[0])
        return i + 1, float(tail[i])

    def horner(self, z, nterms: int) -> np.ndarray:
        c = self.coeffs[:nterms]
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for ck in c[::-1]:
            acc = acc * z + ck
        if self.shift:
            acc = acc * z ** self.shift
        return acc

    def evaluate(self, z, tol: float = DEFAULT_TOL):
        """Values at ``z`` (scalar or array) with one uniform truncation.

        Returns ``(values, terms_used, tail_bound)``.
        """
        za = np.asarray(z, dtype=complex)
        if not np.all(np.isfinite(za)):
            raise DomainError("z must be finite")
        r = float(np.max(np.abs(za))) if za.size else 0.0
        nterms, tail = self.truncation(r, tol)
        return self.horner(za, nterms), nterms, tail


def _suffix_sup_ratio(logc: np.ndarray) -> np.ndarray:
    # running max from the right guards against rounding wiggles in a
    # sequence that is non-increasing in exact arithmetic
    ratio = np.exp(np.diff(logc))
    return np.maximum.accumulate(ratio[::-1])[::-1]


def _eventually_decreasing_sup(logc: np.ndarray) -> np.ndarray:
    ratio = np.exp(np.diff(logc))
    if len(ratio) >= 2 and ratio[-1] > ratio[-2]:
        raise TruncationError("term ratios still increasing at the term cap")
    return np.maximum.accumulate(ratio[::-1])[::-1]


def _value(series: PowerSeries, z, tol: float) -> SeriesValue:
    zc = complex(z)
    vals, n, tail = series.evaluate(np.array([zc]), tol)
    return SeriesValue(complex(vals[0]), n, tail)


# ---------------------------------------------------------------------------
# cached coefficient series for each family


@lru_cache(maxsize=512)
def _normalized_series(p: WrightParams, alternating: bool = False) -> PowerSeries:
    la = log_alpha(p, K_MAX + 1)
    sign = None
    if alternating:
        sign = np.where(np.arange(len(la)) % 2 == 0, 1.0, -1.0)
    return PowerSeries(la, sign, shift=1)


@lru_cache(maxsize=512)
def _raw_series(p: WrightParams) -> PowerSeries:
    return PowerSeries(log_wright_coeffs(p, K_MAX + 1))


@lru_cache(maxsize=256)
def _wright2_series(p: Wright2Params) -> PowerSeries:
    k = np.arange(K_MAX + 2, dtype=float)
    return PowerSeries(-log_gamma(k + 1.0) - log_gamma(p.alpha * k + p.beta))


def _deriv(series: PowerSeries, order: int) -> PowerSeries:
    for _ in range(order):
        series = series.derivative()
    return series


# ---------------------------------------------------------------------------
# public scalar evaluators


def eval_wright2(p: Wright2Params, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """``W_{alpha,beta}(z) = sum z^k / (k! Gamma(alpha k + beta))``."""
    return _value(_wright2_series(p), z, tol)


def eval_wright4(p: WrightParams, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Four-parameter Wright function ``sum z^k / (Gamma(a+k mu) Gamma(b+k nu))``."""
    return _value(_raw_series(p), z, tol)


def eval_normalized(p: WrightParams, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Normalized function ``z Gamma(a) Gamma(b) W(z) = sum alpha_k z^(k+1)``."""
    return _value(_normalized_series(p), z, tol)


def eval_normalized_deriv(p: WrightParams, z, order: int = 1, tol: float = DEFAULT_TOL) -> SeriesValue:
    """First or second derivative of the normalized function, differentiated term-wise."""
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order}")
    return _value(_deriv(_normalized_series(p), order), z, tol)


def eval_fox_wright(s: FoxWrightSpec, x: float, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Fox-Wright function at a real argument."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("x must be finite")
    logc = s.log_coeffs(K_MAX + 1)
    series = PowerSeries(logc, ratio_sup=_eventually_decreasing_sup(logc))
    vals, n, tail = series.evaluate(np.array([x]), tol)
    return SeriesValue(float(vals[0].real), n, tail)


def eval_1F2(c: float, a: float, b: float, x: float, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Hypergeometric ``1F2(c; a, b; x) = sum (c)_k / ((a)_k (b)_k) x^k / k!``."""
    if not (a > 0 and b > 0):
        raise DomainError(f"need a, b > 0, got a={a}, b={b}")
    x = float(x)
    k = np.arange(K_MAX + 1, dtype=float)
    num = c + k
    ratio = num / ((a + k) * (b + k) * (k + 1.0))
    sign = np.concatenate([[1.0], np.cumprod(np.sign(ratio))])
    with np.errstate(divide="ignore"):
        logc = np.concatenate([[0.0], np.cumsum(np.log(np.abs(ratio)))])
    sign[np.isneginf(logc)] = 0.0
    # |c + j| / (a + j) is monotone in j with limit 1, and 1/((b+j)(j+1)) decreases
    ratio_sup = np.maximum(1.0, (abs(c) + k) / (a + k)) / ((b + k) * (k + 1.0))
    series = PowerSeries(logc, sign, 0, ratio_sup)
    vals, n, tail = series.evaluate(np.array([x]), tol)
    return SeriesValue(float(vals[0].real), n, tail)


def partial_sum_coefficients(p: WrightParams, N: int, which: str) -> np.ndarray:
    """Ascending coefficients of the ``N``-th partial sum.

    ``which`` is ``"raw"`` (``k = 0..N`` terms of the unnormalized function),
    ``"normalized"`` (``z + alpha_1 z^2 + ... + alpha_{N-1} z^N``, with the zero
    constant term kept) or ``"qfactor"`` (the normalized sum divided by ``z``).
    """
    if int(N) != N or N < 1:
        raise DomainError(f"N must be a positive integer, got {N}")
    N = int(N)
    if which == "raw":
        return np.exp(log_wright_coeffs(p, N))
    if which == "normalized":
        return np.concatenate([[0.0], np.exp(log_alpha(p, N - 1))])
    if which == "qfactor":
        return np.exp(log_alpha(p, N - 1))
    raise DomainError(f"unknown partial sum kind {which!r}")


def partial_sum(p: WrightParams, N: int, which: str, z) -> complex:
    """Exact finite partial sum, by Horner's rule."""
    if which not in ("raw", "normalized"):
        raise DomainError(f"which must be 'raw' or 'normalized', got {which!r}")
    c = partial_sum_coefficients(p, N, which)
    acc = 0j
    zc = complex(z)
    for ck in c[::-1]:
        acc = acc * zc + ck
    return acc


def bessel_normalized(beta: float, z, tol: float = DEFAULT_TOL, order: int = 0) -> SeriesValue:
    """Normalized Bessel function ``Gamma(beta+1) z^(1-beta/2) J_beta(2 sqrt z)``.

    Built from the normalized Wright function with ``(mu, a, nu, b) =
    (1, beta+1, 1, 1)`` at ``-z``; the sign of each power is folded into
    the coefficients so the result is again normalized (``f'(0) = 1``).
    ``order`` selects a term-wise derivative (0, 1 or 2).
    """
    if order not in (0, 1, 2):
        raise DomainError(f"order must be 0, 1 or 2, got {order}")
    return _value(_deriv(_normalized_series(_bessel_params(beta), True), order), z, tol)


def two_param_normalized(b: float, nu: float, z, tol: float = DEFAULT_TOL) -> SeriesValue:
    """Normalized two-parameter Wright function ``z Gamma(b) W_{nu,b}(z)``."""
    return eval_normalized(_two_param_params(b, nu), z, tol)


def _bessel_params(beta: float) -> WrightParams:
    if not beta > -1:
        raise DomainError(f"beta > -1 required, got {beta}")
    return WrightParams(1.0, beta + 1.0, 1.0, 1.0)


def _two_param_params(b: float, nu: float) -> WrightParams:
    if not (b > 0 and nu > 0):
        raise DomainError(f"need b > 0 and nu > 0, got b={b}, nu={nu}")
    return WrightParams(1.0, 1.0, nu, b)


# ---------------------------------------------------------------------------
# vectorized function objects, used by the oracle and the plotter


class SeriesFunction:
    """An analytic map backed by a power series, evaluated on arrays.

    ``evaluate(z, order)`` returns ``(values, tail_bound)`` where the tail
    bound holds uniformly over every point of ``z``.
    """

    def __init__(self, series: PowerSeries, name: str = "f", tol: float = 1e-15):
        self.name = name
        self.tol = tol
        self._series = [series]

    def _order(self, order: int) -> PowerSeries:
        while len(self._series) <= order:
            self._series.append(self._series[-1].derivative())
        return self._series[order]

    def evaluate(self, z, order: int = 0):
        vals, _, tail = self._order(order).evaluate(z, self.tol)
        return vals, tail

    def __call__(self, z):
        return self.evaluate(z, 0)[0]

    def __repr__(self):
        return f"SeriesFunction({self.name})"


def wright_map(p: WrightParams, tol: float = 1e-15) -> SeriesFunction:
    return SeriesFunction(
        _normalized_series(p),
        f"W[(mu={p.mu:g},a={p.a:g}),(nu={p.nu:g},b={p.b:g})]", tol)


def raw_wright_map(p: WrightParams, tol: float = 1e-15) -> SeriesFunction:
    return SeriesFunction(
        _raw_series(p), f"calW[(mu={p.mu:g},a={p.a:g}),(nu={p.nu:g},b={p.b:g})]", tol)


def bessel_map(beta: float, tol: float = 1e-15) -> SeriesFunction:
    return SeriesFunction(_normalized_series(_bessel_params(beta), True), f"J[beta={beta:g}]", tol)


def two_param_map(b: float, nu: float, tol: float = 1e-15) -> SeriesFunction:
    return SeriesFunction(
        _normalized_series(_two_param_params(b, nu)), f"W[b={b:g},nu={nu:g}]", tol)


def partial_sum_map(p: WrightParams, N: int, which: str) -> SeriesFunction:
    c = partial_sum_coefficients(p, N, which)
    with np.errstate(divide="ignore"):
        logc = np.log(np.abs(c))
    series = PowerSeries(logc, np.sign(c), finite=True)
    return SeriesFunction(series, f"{which}-partial-sum[N={N}]")


def coefficient_map(coeffs: Sequence[float], name: str = "poly") -> SeriesFunction:
    c = np.asarray(coeffs, dtype=float)
    with np.errstate(divide="ignore"):
        logc = np.log(np.abs(c))
    return SeriesFunction(PowerSeries(logc, np.sign(c), finite=True), name)
