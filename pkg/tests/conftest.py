import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def brute_wright(mu, a, nu, b, z, terms=200):
    """Compensated sum of ``z^k / (Gamma(a+k mu) Gamma(b+k nu))``.

    Uses the standard-library lgamma, not the package's own log-gamma.
    """
    z = complex(z)
    if z == 0:
        return complex(1.0 / (math.gamma(a) * math.gamma(b)))
    lr = math.log(abs(z))
    th = math.atan2(z.imag, z.real)
    re, im = [], []
    for k in range(terms):
        m = math.exp(k * lr - math.lgamma(a + k * mu) - math.lgamma(b + k * nu))
        re.append(m * math.cos(k * th))
        im.append(m * math.sin(k * th))
    return complex(math.fsum(re), math.fsum(im))


def brute_normalized(mu, a, nu, b, z, terms=200):
    return complex(z) * math.gamma(a) * math.gamma(b) * brute_wright(mu, a, nu, b, z, terms)


def rel_err(x, ref):
    return abs(x - ref) / abs(ref)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    """Log one pass/fail line for an acceptance criterion and return the verdict."""

    def _record(cid, ok, detail):
        line = f"[{cid}] {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
