import math

import mpmath
import numpy as np
import pytest
import scipy.stats

from hypothesis import given, settings, strategies as st

from cogl.special import chi2_log_cdf, chi2_log_sf

# the stated accuracy contract: 1e-6 absolute error in the log, down to
# tail magnitudes around e^-100
LOG_TOL = 1e-6

SWEEP_DOFS = (2, 10, 1000, 36864)
SWEEP_FRACTIONS = (0.1, 0.5, 1.0, 1.5, 3.0)


def _sweep_points():
    for dof in SWEEP_DOFS:
        for f in SWEEP_FRACTIONS:
            yield f * dof, dof


@pytest.mark.parametrize("t,dof", list(_sweep_points()))
def test_matches_scipy_log_cdf_and_sf(t, dof):
    # scipy takes the plain log of the probability, so its value is only a
    # valid oracle while that probability has not underflowed to 0
    ref_cdf = scipy.stats.chi2.logcdf(t, dof)
    ref_sf = scipy.stats.chi2.logsf(t, dof)
    if np.isfinite(ref_cdf):
        assert chi2_log_cdf(t, dof) == pytest.approx(ref_cdf, abs=LOG_TOL)
    if np.isfinite(ref_sf):
        assert chi2_log_sf(t, dof) == pytest.approx(ref_sf, abs=LOG_TOL)


@pytest.mark.parametrize("t,dof", list(_sweep_points()))
def test_matches_mpmath_across_sweep(t, dof):
    # arbitrary-precision oracle covers the points scipy underflows on
    mp_cdf, mp_sf = _mp_log_tails(t, dof)
    assert chi2_log_cdf(t, dof) == pytest.approx(mp_cdf, abs=LOG_TOL)
    assert chi2_log_sf(t, dof) == pytest.approx(mp_sf, abs=LOG_TOL)


@pytest.mark.parametrize("t,dof", list(_sweep_points()))
def test_complementarity(t, dof):
    # exp(log_cdf) + exp(log_sf) = 1, checked in log space
    assert abs(np.logaddexp(chi2_log_cdf(t, dof), chi2_log_sf(t, dof))) <= 1e-9


def _mp_log_tails(t, dof):
    # high-precision regularized incomplete gamma as an independent oracle
    with mpmath.workdps(60):
        a = mpmath.mpf(dof) / 2
        x = mpmath.mpf(t) / 2
        p = mpmath.gammainc(a, 0, x, regularized=True)
        q = mpmath.gammainc(a, x, mpmath.inf, regularized=True)
        return float(mpmath.log(p)), float(mpmath.log(q))


@pytest.mark.parametrize("t,dof", [
    # lower tail near e^-100 and far below
    (700.0, 1000), (500.0, 1000), (0.2, 10),
    # upper tail near e^-100 and far below
    (260.0, 10), (400.0, 10), (1500.0, 1000),
    # the published operating point
    (186.21 ** 2, 36864), (197.83 ** 2, 36864),
])
def test_deep_tails_against_mpmath(t, dof):
    mp_cdf, mp_sf = _mp_log_tails(t, dof)
    assert chi2_log_cdf(t, dof) == pytest.approx(mp_cdf, abs=LOG_TOL)
    assert chi2_log_sf(t, dof) == pytest.approx(mp_sf, abs=LOG_TOL)


def test_published_tail_magnitudes():
    lo = chi2_log_cdf(186.21 ** 2, 36864) / math.log(10.0)
    hi = chi2_log_sf(197.83 ** 2, 36864) / math.log(10.0)
    assert -17.5 <= lo <= -14.5
    assert -17.5 <= hi <= -14.5


def test_boundaries():
    assert chi2_log_cdf(0.0, 7) == -math.inf
    assert chi2_log_sf(0.0, 7) == 0.0
    assert chi2_log_cdf(math.inf, 7) == 0.0
    assert chi2_log_sf(math.inf, 7) == -math.inf


def test_domain_errors():
    with pytest.raises(ValueError):
        chi2_log_cdf(-1.0, 4)
    with pytest.raises(ValueError):
        chi2_log_sf(float("nan"), 4)
    for bad_dof in (0, -3, 2.5, True, "4"):
        with pytest.raises(ValueError):
            chi2_log_cdf(1.0, bad_dof)


def test_float_valued_integer_dof_accepted():
    assert chi2_log_cdf(3.0, 4.0) == chi2_log_cdf(3.0, 4)


@settings(max_examples=60)
@given(dof=st.integers(min_value=1, max_value=5000),
       t=st.floats(min_value=0.0, max_value=1e5, allow_nan=False))
def test_property_complement_and_range(dof, t):
    c = chi2_log_cdf(t, dof)
    s = chi2_log_sf(t, dof)
    assert c <= 0.0 and s <= 0.0
    if t > 0.0:
        assert abs(np.logaddexp(c, s)) <= 1e-9


@settings(max_examples=40)
@given(dof=st.integers(min_value=1, max_value=2000),
       t1=st.floats(min_value=0.0, max_value=5e4, allow_nan=False),
       t2=st.floats(min_value=0.0, max_value=5e4, allow_nan=False))
def test_property_monotone(dof, t1, t2):
    lo, hi = sorted((t1, t2))
    assert chi2_log_cdf(lo, dof) <= chi2_log_cdf(hi, dof) + 1e-12
    assert chi2_log_sf(hi, dof) <= chi2_log_sf(lo, dof) + 1e-12
