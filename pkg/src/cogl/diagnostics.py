"""Statistical verification chain: typicality, tails, and Monte Carlo checks.

The squared norm of a standardized D-dimensional Gaussian vector follows
chi2(D), which concentrates tightly around D for large D. The reports here
expose both axes along which a vector can fail to look like a sample: its
norm percentile under chi2(D) and its log-density percentile (computed
analytically through the same chi-squared law, no Monte Carlo). The Monte
Carlo operations (beta interval estimation, distribution checking) consume
the deterministic stream from cogl.rng, with draw indices laid out per trial,
so their output is independent of chunking and thread settings.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import rng
from .core import BETA_MIN, GaussianSpec, as_latent, check_dim, combination_stats
from .errors import DegenerateWeights
from .schemes import slerp_weights
from .special import chi2_log_cdf, chi2_log_sf

__all__ = [
    "TypicalityReport", "IntervalEstimate", "DistributionCheck",
    "gaussian_log_density", "chi2_mode", "chi2_log_cdf", "chi2_log_sf",
    "typicality_report", "estimate_slerp_beta_ci", "sample_latents",
    "check_cog_distribution",
]

# Trials are generated and accumulated in fixed-size blocks; the block size is
# part of the algorithm definition, not a tuning knob.
_TRIAL_BLOCK = 256


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, np.ndarray):
        return ",".join(format(float(x), ".17g") for x in v)
    return str(v)


class _Report:
    """key=value and JSON serialization shared by the report types."""

    def to_json_dict(self) -> dict:
        out = {}
        for name in self.__dataclass_fields__:
            v = getattr(self, name)
            if isinstance(v, np.ndarray):
                out[name] = [float(x) for x in v]
            elif isinstance(v, (np.integer,)):
                out[name] = int(v)
            elif isinstance(v, (np.floating,)):
                out[name] = float(v)
            else:
                out[name] = v
        return out

    def to_key_values(self) -> str:
        return "\n".join(f"{name}={_fmt_value(getattr(self, name))}"
                         for name in self.__dataclass_fields__)


@dataclass(frozen=True)
class TypicalityReport(_Report):
    """Norm and density placement of one latent under its spec.

    norm is the standardized norm r = ||(x - mu)/sigma||; norm_log_cdf and
    norm_log_sf place r^2 under chi2(D). density_percentile is the analytic
    probability that a fresh sample's log-density is at or below the observed
    one, which for a diagonal Gaussian is the upper chi-squared tail of the
    quadratic form.
    """

    norm: float
    norm_sq: float
    norm_log_cdf: float
    norm_log_sf: float
    log_density: float
    density_percentile: float


@dataclass(frozen=True)
class IntervalEstimate(_Report):
    """Empirical central quantile interval from a seeded Monte Carlo run."""

    lo: float
    hi: float
    confidence: float
    n_samples: int
    seed: int

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"lo = {self.lo} exceeds hi = {self.hi}")


@dataclass(frozen=True)
class DistributionCheck(_Report):
    """Moment check of corrected combinations against their target law.

    mean_error is max_d |m_d - mu_d| / sigma_d over sample means m; var_error
    is max_d |v_d - Sigma_dd| / Sigma_dd over sample variances v (population
    form). passed requires mean_error <= mean_limit and var_error <= var_limit.
    """

    passed: bool
    n_trials: int
    seed: int
    corrected: bool
    mean_error: float
    var_error: float
    mean_limit: float
    var_limit: float
    component_mean_error: np.ndarray
    component_var_error: np.ndarray


def gaussian_log_density(x, spec: GaussianSpec) -> float:
    """log N(x; mu, Sigma) for a diagonal Gaussian:
    -0.5 * sum_d [ln(2 pi Sigma_dd) + (x_d - mu_d)^2 / Sigma_dd]."""
    x = as_latent(x)
    check_dim(x, spec)
    var = spec.var_vector()
    diff = x - spec.mean_vector()
    quad = float(np.sum(diff * diff / var))
    log_norm = float(np.sum(np.log(2.0 * math.pi * var)))
    return -0.5 * (log_norm + quad)


def chi2_mode(dof: int) -> float:
    """Argmax of the chi2(dof) density, which is dof - 2 for dof >= 3."""
    if isinstance(dof, bool) or int(dof) != dof:
        raise ValueError(f"degrees of freedom must be an integer, got {dof!r}")
    dof = int(dof)
    if dof < 3:
        raise ValueError(f"chi2 mode needs dof >= 3 (density peaks at 0 below that), got {dof}")
    return float(dof - 2)


def typicality_report(x, spec: GaussianSpec) -> TypicalityReport:
    """Standardize x under spec and place it on both typicality axes."""
    x = as_latent(x)
    check_dim(x, spec)
    z = spec.standardize(x)
    norm_sq = float(np.sum(z * z))
    norm = math.sqrt(norm_sq)
    log_cdf = chi2_log_cdf(norm_sq, spec.dim)
    log_sf = chi2_log_sf(norm_sq, spec.dim)
    return TypicalityReport(
        norm=norm,
        norm_sq=norm_sq,
        norm_log_cdf=log_cdf,
        norm_log_sf=log_sf,
        log_density=gaussian_log_density(x, spec),
        density_percentile=math.exp(log_sf),
    )


def sample_latents(spec: GaussianSpec, count: int, seed) -> list:
    """count i.i.d. draws from spec; latent j consumes stream indices
    [j*dim, (j+1)*dim). Output depends only on (spec, count, seed)."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    d = spec.dim
    z = rng.normals(seed, 0, count * d).reshape(count, d)
    x = z * spec.sigma_vector() + spec.mean_vector()
    return [np.ascontiguousarray(row) for row in x]


def estimate_slerp_beta_ci(dim: int, n_samples: int, v: float, confidence: float, seed) -> IntervalEstimate:
    """Empirical central quantile interval of beta over spherical weights.

    Each trial t draws an endpoint pair from N(0, I_dim) at stream indices
    [2*t*dim, 2*t*dim + dim) and [2*t*dim + dim, 2*t*dim + 2*dim), computes
    slerp_weights(v, x1, x2), and records beta. The interval is the empirical
    ((1-c)/2, (1+c)/2) quantile pair (linear interpolation between order
    statistics).
    """
    if int(dim) != dim or dim < 1:
        raise ValueError(f"dim must be a positive integer, got {dim!r}")
    dim = int(dim)
    if n_samples < 100:
        raise ValueError(f"n_samples must be >= 100, got {n_samples}")
    confidence = float(confidence)
    if not 0.0 < confidence < 1.0:
        raise ValueError(f"confidence must be in (0, 1), got {confidence}")
    seed = rng.check_seed(seed)

    betas = np.empty(n_samples)
    for t in range(n_samples):
        base = 2 * t * dim
        x1 = rng.normals(seed, base, dim)
        x2 = rng.normals(seed, base + dim, dim)
        betas[t] = slerp_weights(v, x1, x2).beta
    lo, hi = np.quantile(betas, [(1.0 - confidence) / 2.0, (1.0 + confidence) / 2.0])
    return IntervalEstimate(lo=float(lo), hi=float(hi), confidence=confidence,
                            n_samples=int(n_samples), seed=seed)


def check_cog_distribution(spec: GaussianSpec, weights, n_trials: int, seed,
                           corrected: bool = True) -> DistributionCheck:
    """Monte Carlo moment check that corrected combinations follow spec.

    Trial t draws K fresh latents at stream indices [t*K*dim, (t+1)*K*dim),
    combines them with the given weights, applies the correction transform
    (unless corrected=False, the negative control), and accumulates
    per-component means and variances. Pass thresholds: standardized mean
    error <= 5/sqrt(n_trials), relative variance error <= 0.1 (calibrated
    for n_trials >= 20000).
    """
    wv = combination_stats(weights)
    if wv.beta <= BETA_MIN:
        raise DegenerateWeights(
            f"beta = {wv.beta:.3g} is at or below {BETA_MIN:g}; weights are all zero or vanishing"
        )
    if n_trials < 1:
        raise ValueError(f"n_trials must be >= 1, got {n_trials}")
    seed = rng.check_seed(seed)

    d = spec.dim
    k = wv.k
    w = wv.weights
    mu = spec.mean_vector()
    sigma = spec.sigma_vector()
    var = spec.var_vector()
    root_beta = np.sqrt(wv.beta)
    shift_coef = 1.0 - wv.alpha / root_beta

    s1 = np.zeros(d)
    s2 = np.zeros(d)
    for t0 in range(0, n_trials, _TRIAL_BLOCK):
        m = min(_TRIAL_BLOCK, n_trials - t0)
        z = rng.normals(seed, t0 * k * d, m * k * d).reshape(m, k, d)
        x = z * sigma + mu
        y = w[0] * x[:, 0, :]
        for j in range(1, k):
            y += w[j] * x[:, j, :]
        out = shift_coef * mu + y / root_beta if corrected else y
        s1 += out.sum(axis=0)
        s2 += (out * out).sum(axis=0)

    mean = s1 / n_trials
    variance = s2 / n_trials - mean * mean
    comp_mean_err = np.abs(mean - mu) / sigma
    comp_var_err = np.abs(variance - var) / var
    mean_error = float(comp_mean_err.max())
    var_error = float(comp_var_err.max())
    mean_limit = 5.0 / math.sqrt(n_trials)
    var_limit = 0.1
    return DistributionCheck(
        passed=bool(mean_error <= mean_limit and var_error <= var_limit),
        n_trials=int(n_trials),
        seed=seed,
        corrected=bool(corrected),
        mean_error=mean_error,
        var_error=var_error,
        mean_limit=mean_limit,
        var_limit=var_limit,
        component_mean_error=comp_mean_err,
        component_var_error=comp_var_err,
    )
