import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wrightfn import (
    DomainError,
    FoxWrightSpec,
    PsiMoments,
    WrightParams,
    bound_conditions,
    eval_fox_wright,
    psi_moments,
    two_sided_bound,
)
from wrightfn.foxwright import kt1_spec, kt2_spec, kt4_spec, yyy5_spec

SPECS = [kt1_spec, kt2_spec, kt4_spec, yyy5_spec]


@pytest.mark.parametrize("m, expected", [
    (PsiMoments(1.0, 0.5, 1 / 6), False),
    (PsiMoments(1.0, 0.3, 0.2), True),
    (PsiMoments(1.0, 0.1, 0.2), False),
])
def test_bound_conditions_examples(m, expected):
    ok, ledger = bound_conditions(m)
    assert ok is expected
    assert [h.name for h in ledger] == ["psi2 < psi1", "psi1^2 < psi0*psi2"]


def test_bound_conditions_ledger_values():
    _, ledger = bound_conditions(PsiMoments(1.0, 0.5, 1 / 6))
    first, second = ledger
    assert first.holds and not second.holds
    assert second.lhs == pytest.approx(0.25)
    assert second.rhs == pytest.approx(1 / 6)


def test_exact_equality_is_not_strict():
    # psi1^2 == psi0 psi2 exactly; rounding must not decide the verdict
    ok, ledger = bound_conditions(PsiMoments(0.5, 1 / 12, 1 / 72))
    assert not ok
    assert not ledger[1].holds


def test_psi_moments_kt4():
    s = kt4_spec(WrightParams(1, 2, 1, 3))
    m = psi_moments(s)
    # Gamma(1+k) / (Gamma(3+k) Gamma(4+k))
    assert m.psi0 == pytest.approx(1 / (2 * 6), rel=1e-14)
    assert m.psi1 == pytest.approx(1 / (6 * 24), rel=1e-14)
    assert m.psi2 == pytest.approx(2 / (24 * 120), rel=1e-14)


def test_moments_survive_underflow():
    m = psi_moments(kt4_spec(WrightParams(3, 200, 3, 200)))
    l0, l1, l2 = m.logs()
    assert m.psi0 == 0.0
    assert l0 > l1 > l2
    ok, _ = bound_conditions(m)
    assert isinstance(ok, bool)


def test_bound_at_zero():
    s = kt1_spec(WrightParams(1, 2, 1, 3))
    r = two_sided_bound(s, 0.0)
    assert r.lower == r.upper == pytest.approx(psi_moments(s).psi0)
    assert eval_fox_wright(s, 0.0).value == pytest.approx(r.lower, rel=1e-14)


def test_enclosure_example():
    s = kt4_spec(WrightParams(1, 1, 1, 3))
    r = two_sided_bound(s, 1.0)
    v = eval_fox_wright(s, 1.0).value
    assert r.conditions_hold
    assert r.lower <= v <= r.upper


def test_enclosure_needs_conditions():
    # psi1^2 > psi0 psi2 here, and the lower formula overshoots the value
    s = kt1_spec(WrightParams(1, 2, 1, 3))
    r = two_sided_bound(s, 1.0)
    v = eval_fox_wright(s, 1.0, tol=1e-16).value
    assert not r.conditions_hold
    assert [h.holds for h in r.lhs_rhs_ledger] == [True, False]
    assert r.lower > v


def test_negative_x_rejected():
    with pytest.raises(DomainError):
        two_sided_bound(kt4_spec(WrightParams(1, 1, 1, 1)), -0.5)


def test_failed_conditions_still_report_values():
    r = two_sided_bound(kt2_spec(WrightParams(1, 1, 1, 1)), 1.0)
    assert math.isfinite(r.lower) and math.isfinite(r.upper)
    d = r.as_dict()
    assert set(d) == {"lower", "upper", "conditions_hold", "ledger"}
    assert len(d["ledger"]) == 2


@given(st.sampled_from(SPECS), st.floats(1.0, 14.0), st.floats(1.0, 14.0), st.floats(0.0, 1.0))
def test_enclosure_property(spec_fn, a, b, x):
    s = spec_fn(WrightParams(1.0, a, 1.0, b))
    r = two_sided_bound(s, x)
    if not r.conditions_hold:
        return
    v = eval_fox_wright(s, x, tol=1e-16)
    slack = v.tail_bound + 1e-12 * abs(v.value)
    assert r.lower - slack <= v.value <= r.upper + slack


@given(st.floats(0.5, 3.0), st.floats(0.5, 5.0), st.floats(0.5, 3.0), st.floats(0.5, 5.0))
def test_specs_converge(mu, a, nu, b):
    for fn in SPECS:
        assert fn(WrightParams(mu, a, nu, b)).epsilon > 0


def test_epsilon_nonpositive_rejected():
    with pytest.raises(DomainError):
        FoxWrightSpec([(1.0, 1.0), (1.0, 1.0)], [(1.0, 1.0)])
