import math
from dataclasses import dataclass

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from wrightfn import DomainError, GridSpec, SequenceSpec, WrightParams, default_grid, wright_map
from wrightfn.oracle import (
    HALF_PLANE_MAP,
    ClosedForm,
    IDENTITY,
    KOEBE,
    DeviationMode,
    OracleVerdict,
    Spacing,
    check_bound_deviation,
    check_close_to_convex,
    check_convex,
    check_convex_decreasing,
    check_half_plane,
    check_property,
    check_sp,
    check_starlike,
    check_subordinating_sequence,
    check_ucv,
)
from wrightfn.properties import CONVEX_HALF, STARLIKE_D, STARLIKE_HALF, SP, UCV, PropertyKind
from wrightfn.series import coefficient_map

SMALL = GridSpec(0.9, 16, 64)


def W(a, b, mu=1.0, nu=1.0):
    return wright_map(WrightParams(mu, a, nu, b))


@dataclass(frozen=True)
class UpperHalfGrid(GridSpec):
    """Angles in [0, pi] only (the real axis included)."""

    def angles(self):
        return 2.0 * np.pi * np.arange(self.n_angles // 2 + 1) / self.n_angles


# --- grid ---------------------------------------------------------------------


def test_default_grid():
    g = default_grid()
    assert g.r_max == pytest.approx(0.999)
    assert g.points().shape == (64, 256)
    assert np.max(np.abs(g.points())) == pytest.approx(g.r_max, rel=1e-15)
    assert default_grid(0.5).r_max == pytest.approx(0.499)


@pytest.mark.parametrize("spacing", list(Spacing))
def test_grid_points_inside(spacing):
    g = GridSpec(0.7, 10, 16, spacing)
    r = g.radii()
    assert np.all(r > 0) and np.all(r <= 0.7 + 1e-15) and np.all(np.diff(r) > 0)


@pytest.mark.parametrize("bad", [(1.0, 8, 8), (0.0, 8, 8), (0.5, 1, 8), (0.5, 8, 4)])
def test_grid_validation(bad):
    with pytest.raises(DomainError):
        GridSpec(*bad)


def test_refined_doubles():
    g = GridSpec(0.9, 16, 64).refined()
    assert (g.n_radii, g.n_angles) == (32, 128)


# --- closed-form references -----------------------------------------------


@pytest.mark.parametrize("eta", [0.0, 0.25])
def test_identity_starlike(eta):
    c = check_starlike(IDENTITY, grid=SMALL, eta=eta)
    assert c.extremal_value == pytest.approx(1.0)
    assert c.margin == pytest.approx(1.0 - eta)


def test_koebe_starlike():
    c = check_starlike(KOEBE, grid=SMALL)
    # z f'/f = (1+z)/(1-z); min real part on |z| <= 0.9 is (1-0.9)/(1+0.9)
    assert c.ok
    assert c.extremal_value == pytest.approx(0.1 / 1.9, rel=1e-12)
    assert c.extremal_point == pytest.approx(-0.9)


def test_half_plane_map_convex():
    c = check_convex(HALF_PLANE_MAP, grid=SMALL)
    assert c.ok
    assert c.extremal_value == pytest.approx(0.1 / 1.9, rel=1e-12)


def test_identity_other_checks():
    assert check_convex(IDENTITY, grid=SMALL).extremal_value == pytest.approx(1.0)
    for chk in (check_ucv, check_sp):
        c = chk(IDENTITY, SMALL)
        assert c.extremal_value == pytest.approx(0.0, abs=1e-15)
        assert c.margin == pytest.approx(0.5)
    assert check_close_to_convex(IDENTITY, IDENTITY, SMALL).extremal_value == pytest.approx(1.0)
    d = check_bound_deviation(IDENTITY, DeviationMode.F_OVER_Z, 1.0, SMALL)
    assert d.extremal_value == pytest.approx(0.0, abs=1e-15)


def test_starlike_reports_vanishing():
    # z + 2 z^2 vanishes at -1/2
    f = coefficient_map([0, 1, 2.0])
    c = check_starlike(f, grid=SMALL)
    assert c.verdict is OracleVerdict.VIOLATION


def test_starlike_vanishing_on_grid():
    f = ClosedForm("0", np.zeros_like, np.ones_like, np.zeros_like)
    c = check_starlike(f, grid=SMALL)
    assert c.margin == -math.inf
    assert "vanishes" in c.note


def test_starlike_eta_validated():
    with pytest.raises(DomainError):
        check_starlike(IDENTITY, grid=SMALL, eta=1.0)


def test_close_to_convex_needs_normalized_witness():
    g = coefficient_map([0.5, 1.0])
    with pytest.raises(DomainError):
        check_close_to_convex(IDENTITY, g, SMALL)


# --- Wright-function examples ------------------------------------------------


def test_wright_examples():
    assert check_starlike(W(1, 2.5), 0.5).ok
    assert check_convex(W(14, 0.6), 0.5).ok
    assert check_ucv(W(4, 15)).ok
    assert check_sp(W(1, 3.7)).ok
    f, g = W(1, 2.5, nu=2), W(1, 2.5)
    assert check_close_to_convex(f, g, witness=WrightParams(1, 1, 1, 2.5)).ok
    d = check_bound_deviation(W(math.sqrt(2), math.sqrt(3)), "f_over_z_minus_1", 1.0)
    assert d.ok
    d = check_bound_deviation(W(1, 5), DeviationMode.F_OVER_Z, 2 / math.sqrt(5))
    assert math.isfinite(d.margin)


def test_half_plane_examples():
    p = WrightParams(2, 1, 2, 1)
    c = check_half_plane(p)
    assert c.ok and c.extremal_value > 0.5
    assert check_half_plane(p, N=6).ok
    with pytest.raises(DomainError):
        check_half_plane(WrightParams(2, 2, 2, 1))


def test_half_plane_centre_value():
    c = check_half_plane(WrightParams(2, 1, 2, 1), GridSpec(0.01, 4, 8))
    assert c.extremal_value <= 1.0 + 1e-12


def test_subordinating_sequences():
    zero = check_subordinating_sequence(SequenceSpec([0.0, 0.0]), SMALL)
    assert zero.extremal_value == 1.0
    bad = check_subordinating_sequence(SequenceSpec([-1.0]), SMALL)
    assert not bad.ok
    assert bad.extremal_point == pytest.approx(0.9)
    good = check_subordinating_sequence(SequenceSpec(lambda k: math.exp(-2 * math.lgamma(1 + 2 * k))))
    assert good.ok


def test_sequence_cap():
    with pytest.raises(DomainError):
        SequenceSpec(lambda k: 1.0 / k, cap=4)


@pytest.mark.parametrize("seq, expected", [
    (SequenceSpec(lambda k: 1.0 / k, cap=40), True),
    (SequenceSpec(lambda k: 1.0 / math.gamma(1 + 2 * (k - 1)) ** 2, cap=20), True),
    (SequenceSpec(lambda k: float(k), cap=10), False),
])
def test_convex_decreasing(seq, expected):
    assert check_convex_decreasing(seq) is expected


def test_check_property_dispatch():
    f = W(2, 3)
    for prop in (STARLIKE_D, STARLIKE_HALF, CONVEX_HALF, UCV, SP):
        c = check_property(prop, f)
        assert c.property == prop
        assert c.grid.r_max == pytest.approx(prop.region.radius - 1e-3)


def test_as_dict_keys():
    d = check_starlike(W(1, 3), grid=SMALL).as_dict()
    assert d["verdict"] in ("NoViolationFound", "ViolationFound")
    assert d["grid"]["r_max"] == 0.9
    assert d["note"].startswith("falsification-grade")


# --- invariants -------------------------------------------------------------

CASES = [(1, 1.5), (1, 5), (2, 2), (5, 14), (14, 1)]


@pytest.mark.parametrize("a, b", CASES)
@pytest.mark.parametrize("check", [
    lambda f, g: check_starlike(f, grid=g),
    lambda f, g: check_convex(f, grid=g),
    lambda f, g: check_ucv(f, g),
    lambda f, g: check_sp(f, g),
])
def test_grid_refinement_stability(a, b, check):
    f = W(a, b)
    g = default_grid()
    assert abs(check(f, g).extremal_value - check(f, g.refined()).extremal_value) < 1e-3


@given(st.floats(1, 14), st.floats(1, 14), st.floats(1, 3), st.floats(1, 3))
def test_conjugate_symmetry(a, b, mu, nu):
    f = W(a, b, mu, nu)
    full = GridSpec(0.95, 24, 64)
    half = UpperHalfGrid(0.95, 24, 64)
    for chk in (check_starlike, check_convex):
        assert chk(f, grid=half).extremal_value == pytest.approx(
            chk(f, grid=full).extremal_value, rel=1e-12, abs=1e-12)


@given(st.floats(1, 14), st.floats(1, 14))
def test_centre_limit_matches_series(a, b):
    # z f'/f -> 1 as z -> 0, so a tiny grid sees values next to 1
    c = check_starlike(W(a, b), grid=GridSpec(1e-6, 2, 8))
    assert abs(c.extremal_value - 1.0) < 1e-5


def test_margin_sign_defines_verdict():
    c = check_starlike(KOEBE, grid=SMALL, eta=0.5)
    assert c.margin < 0 and c.verdict is OracleVerdict.VIOLATION
    assert c.property.kind is PropertyKind.STARLIKE_ORDER
