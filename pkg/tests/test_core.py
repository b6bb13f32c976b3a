import math

import numpy as np
import pytest

from hypothesis import given, settings, strategies as st

from cogl import (
    BETA_MIN,
    DegenerateWeights,
    DimensionMismatch,
    GaussianSpec,
    WeightVec,
    as_latent,
    check_cog_distribution,
    cog_combine,
    cog_transform,
    combination_stats,
    linear_combine,
)

from conftest import random_latents


# ---------------------------------------------------------------- weights

def test_combination_stats_examples():
    w = combination_stats([1.0, 0.0])
    assert w.alpha == 1.0 and w.beta == 1.0
    w = combination_stats([0.5, 0.5])
    assert w.alpha == 1.0 and w.beta == 0.5
    w = combination_stats([1 / 3, 1 / 3, 1 / 3])
    assert w.alpha == pytest.approx(1.0, rel=1e-15)
    assert w.beta == pytest.approx(1 / 3, rel=1e-15)


def test_combination_stats_errors():
    with pytest.raises(ValueError):
        combination_stats([])
    with pytest.raises(ValueError):
        combination_stats([1.0, math.nan])
    with pytest.raises(ValueError):
        combination_stats([math.inf])


def test_weightvec_passthrough_and_immutability():
    w = combination_stats([2.0, -1.0])
    assert combination_stats(w) is w
    assert not w.weights.flags.writeable
    with pytest.raises(Exception):
        w.weights[0] = 5.0


@settings(max_examples=100)
@given(st.lists(st.floats(min_value=-1e6, max_value=1e6,
                          allow_nan=False), min_size=1, max_size=25))
def test_weight_stats_match_naive_loop(ws):
    # alpha, beta must equal the naive sequential sums to 1e-15 relative
    alpha = 0.0
    beta = 0.0
    for w in ws:
        alpha += w
        beta += w * w
    got = combination_stats(ws)
    assert abs(got.alpha - alpha) <= 1e-15 * max(1.0, abs(alpha))
    assert abs(got.beta - beta) <= 1e-15 * max(1.0, beta)


# ---------------------------------------------------------------- spec

def test_spec_normalization():
    s = GaussianSpec(4, mean=0.5, cov=2.0)
    assert s.is_isotropic and not s.is_zero_mean and not s.is_unit
    assert np.array_equal(s.mean_vector(), np.full(4, 0.5))
    assert np.array_equal(s.var_vector(), np.full(4, 2.0))
    v = GaussianSpec(3, mean=[1.0, 2.0, 3.0], cov=[1.0, 4.0, 9.0])
    assert not v.is_isotropic
    assert np.array_equal(v.sigma_vector(), [1.0, 2.0, 3.0])
    assert GaussianSpec.unit(7).is_unit


def test_spec_standardize_round_trip():
    s = GaussianSpec(3, mean=[1.0, -2.0, 0.5], cov=[4.0, 0.25, 9.0])
    x = np.array([3.0, -1.0, 2.0])
    z = s.standardize(x)
    assert np.allclose(z, [(3 - 1) / 2, (-1 + 2) / 0.5, (2 - 0.5) / 3], atol=0, rtol=1e-15)
    assert np.allclose(s.unstandardize(z), x, atol=0, rtol=1e-15)


def test_spec_validation_errors():
    with pytest.raises(ValueError):
        GaussianSpec(0)
    with pytest.raises(ValueError):
        GaussianSpec(2.5)
    with pytest.raises(ValueError):
        GaussianSpec(True)
    with pytest.raises(ValueError):
        GaussianSpec(4, cov=0.0)
    with pytest.raises(ValueError):
        GaussianSpec(4, cov=-1.0)
    with pytest.raises(ValueError):
        GaussianSpec(4, cov=[1.0, 1.0, 1.0, -1.0])
    with pytest.raises(DimensionMismatch):
        GaussianSpec(4, mean=[1.0, 2.0])
    with pytest.raises(DimensionMismatch):
        GaussianSpec(4, cov=[1.0, 2.0])
    with pytest.raises(ValueError):
        GaussianSpec(2, mean=math.nan)
    with pytest.raises(ValueError):
        # full covariance matrices are not representable
        GaussianSpec(2, cov=[[1.0, 0.0], [0.0, 1.0]])


def test_as_latent_errors():
    with pytest.raises(ValueError):
        as_latent([])
    with pytest.raises(ValueError):
        as_latent([[1.0, 2.0]])
    with pytest.raises(ValueError):
        as_latent([1.0, math.inf])


# ---------------------------------------------------------------- combine

def test_linear_combine_examples():
    x = np.array([4.0, -1.0, 0.5])
    assert np.array_equal(linear_combine([x], [1.0]), x)
    got = linear_combine([[1.0, 2.0], [3.0, 4.0]], [0.5, 0.5])
    assert np.array_equal(got, [2.0, 3.0])
    got = linear_combine([[1.0, 0.0], [0.0, 1.0]], [2.0, -1.0])
    assert np.array_equal(got, [2.0, -1.0])


def test_linear_combine_errors():
    with pytest.raises(DimensionMismatch):
        linear_combine([[1.0, 2.0], [1.0, 2.0, 3.0]], [0.5, 0.5])
    with pytest.raises(DimensionMismatch):
        linear_combine([[1.0, 2.0]], [0.5, 0.5])


def test_cog_transform_examples():
    spec = GaussianSpec(2, mean=5.0, cov=3.0)
    y = np.array([0.25, -7.5])
    # alpha = beta = 1 is the exact identity
    assert np.array_equal(cog_transform(y, [1.0, 0.0], spec), y)

    z = cog_transform([1.0, 1.0], [0.5, 0.5], GaussianSpec.unit(2))
    assert np.allclose(z, [math.sqrt(2.0)] * 2, atol=0, rtol=1e-15)

    z = cog_transform([4.0, 6.0], [2.0], GaussianSpec(2, mean=1.0))
    assert np.array_equal(z, [2.0, 3.0])


def test_cog_transform_degenerate_weights():
    spec = GaussianSpec.unit(2)
    with pytest.raises(DegenerateWeights):
        cog_transform([1.0, 2.0], [0.0, 0.0], spec)
    # beta exactly at the threshold is rejected too
    with pytest.raises(DegenerateWeights):
        cog_transform([1.0, 2.0], [math.sqrt(BETA_MIN)], spec)
    with pytest.raises(DimensionMismatch):
        cog_transform([1.0, 2.0, 3.0], [1.0], spec)


def test_cog_combine_examples():
    x1 = np.array([0.3, -1.2, 8.0])
    x2 = np.array([5.0, 5.0, 5.0])
    spec = GaussianSpec(3, mean=2.0, cov=0.5)
    assert np.array_equal(cog_combine([x1, x2], [1.0, 0.0], spec), x1)
    got = cog_combine([[2.0, 0.0], [0.0, 2.0]], [0.5, 0.5], GaussianSpec.unit(2))
    assert np.allclose(got, [math.sqrt(2.0)] * 2, atol=0, rtol=1e-15)


def test_selector_weights_exact_for_every_position():
    # w = e_k must reproduce x_k bit-for-bit, any k, any spec
    xs = random_latents(100, 5, 9, loc=0.7, scale=2.0)
    spec = GaussianSpec(9, mean=-3.0, cov=4.0)
    for k in range(5):
        w = np.zeros(5)
        w[k] = 1.0
        assert np.array_equal(cog_combine(xs, w, spec), xs[k])


def test_cog_combine_matches_two_step_oracle():
    # independently coded evaluation: plain loops, no shared helpers
    g = np.random.default_rng(42)
    for _ in range(20):
        d, k = 6, 3
        xs = [g.normal(0.4, 1.3, d) for _ in range(k)]
        w = g.uniform(-1.0, 1.0, k)
        mu = g.normal(size=d)
        var = g.uniform(0.5, 2.0, d)
        spec = GaussianSpec(d, mean=mu, cov=var)

        alpha = sum(float(wk) for wk in w)
        beta = sum(float(wk) ** 2 for wk in w)
        if beta <= BETA_MIN:
            continue
        want = np.empty(d)
        for comp in range(d):
            y = sum(float(w[j]) * float(xs[j][comp]) for j in range(k))
            want[comp] = (1.0 - alpha / math.sqrt(beta)) * mu[comp] + y / math.sqrt(beta)

        got = cog_combine(xs, w, spec)
        assert np.allclose(got, want, rtol=1e-12, atol=1e-12)


@settings(max_examples=50)
@given(mu=st.floats(min_value=-10, max_value=10, allow_nan=False),
       sigma=st.floats(min_value=0.1, max_value=10, allow_nan=False),
       seed=st.integers(min_value=0, max_value=2 ** 31))
def test_shift_scale_covariance(mu, sigma, seed):
    # the transform commutes with affine standardization:
    # cog under (mu, sigma^2 I) on y == sigma * cog under (0, I) on
    # (y - alpha*mu)/sigma + mu
    g = np.random.default_rng(seed)
    d, k = 5, 3
    y = g.normal(size=d)
    w = g.uniform(-1.0, 1.0, k)
    wv = combination_stats(w)
    if wv.beta <= BETA_MIN:
        return
    spec = GaussianSpec(d, mean=mu, cov=sigma * sigma)
    got = cog_transform(y, wv, spec)
    y_std = (y - wv.alpha * mu) / sigma
    want = sigma * cog_transform(y_std, wv, GaussianSpec.unit(d)) + mu
    assert np.allclose(got, want, rtol=1e-12, atol=1e-12)


# ------------------------------------------------- distributional check

@pytest.mark.parametrize("dim", [4, 64, 1024])
def test_distributional_correctness(dim):
    # 20000 draws: component means within 5 sigma/sqrt(N), variances
    # within 10% of the target, at every component
    spec = GaussianSpec(dim, mean=0.1, cov=1.5)
    rep = check_cog_distribution(spec, [0.5, 0.5], 20000, 3)
    assert rep.passed
    assert rep.mean_error <= 5.0 / math.sqrt(20000)
    assert rep.var_error <= 0.1
    assert rep.component_mean_error.shape == (dim,)
