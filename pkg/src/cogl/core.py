"""Gaussian latent vectors, combination weights, and the correction transform.

A linear combination y = sum_k w_k x^(k) of i.i.d. draws from N(mu, Sigma) is
distributed N(alpha*mu, beta*Sigma) with alpha = sum w_k and beta = sum w_k^2.
The correction transform

    z = (1 - alpha/sqrt(beta)) * mu + y / sqrt(beta)

maps y back to an exact N(mu, Sigma) variate. This module houses the
distribution spec, the weight statistics, and that transform; everything is
float64 and pure.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateWeights, DimensionMismatch

# Below this, the squared-weight sum is treated as vanished: the combination
# carries no sample information and dividing by sqrt(beta) is meaningless.
BETA_MIN = 1e-12


def as_latent(values) -> np.ndarray:
    """Coerce to a 1-D float64 vector with finite entries."""
    x = np.asarray(values, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError(f"latent must be 1-D, got shape {x.shape}")
    if x.size == 0:
        raise ValueError("latent must be non-empty")
    if not np.all(np.isfinite(x)):
        raise ValueError("latent entries must be finite")
    return x


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class GaussianSpec:
    """The prespecified latent distribution N(mu, Sigma).

    mean is a scalar broadcast over all components or a length-dim vector.
    cov holds variances: a single positive value (isotropic) or a length-dim
    vector (diagonal). Full covariance matrices are not representable here;
    nothing downstream needs more than the diagonal.
    """

    dim: int
    mean: object = 0.0
    cov: object = 1.0

    def __post_init__(self):
        dim = self.dim
        if not isinstance(dim, (int, np.integer)) or isinstance(dim, bool):
            raise ValueError(f"dim must be an integer, got {type(dim).__name__}")
        if dim < 1:
            raise ValueError(f"dim must be >= 1, got {dim}")
        object.__setattr__(self, "dim", int(dim))

        mean = self.mean
        if np.isscalar(mean) and not isinstance(mean, (str, bytes)):
            m = float(mean)
            if not np.isfinite(m):
                raise ValueError("mean must be finite")
            object.__setattr__(self, "mean", m)
        else:
            mv = np.asarray(mean, dtype=np.float64)
            if mv.ndim != 1:
                raise ValueError(f"mean must be a scalar or 1-D vector, got shape {mv.shape}")
            if mv.shape[0] != self.dim:
                raise DimensionMismatch(f"mean has length {mv.shape[0]}, dim is {self.dim}")
            if not np.all(np.isfinite(mv)):
                raise ValueError("mean entries must be finite")
            object.__setattr__(self, "mean", _readonly(mv))

        cov = self.cov
        if np.isscalar(cov) and not isinstance(cov, (str, bytes)):
            c = float(cov)
            if not (np.isfinite(c) and c > 0.0):
                raise ValueError(f"isotropic variance must be a positive finite number, got {cov!r}")
            object.__setattr__(self, "cov", c)
        else:
            cv = np.asarray(cov, dtype=np.float64)
            if cv.ndim != 1:
                raise ValueError(f"cov must be a scalar or 1-D vector of variances, got shape {cv.shape}")
            if cv.shape[0] != self.dim:
                raise DimensionMismatch(f"cov has length {cv.shape[0]}, dim is {self.dim}")
            if not np.all(np.isfinite(cv) & (cv > 0.0)):
                raise ValueError("all variances must be positive and finite")
            object.__setattr__(self, "cov", _readonly(cv))

    @property
    def is_isotropic(self) -> bool:
        return np.isscalar(self.cov)

    @property
    def is_zero_mean(self) -> bool:
        if np.isscalar(self.mean):
            return self.mean == 0.0
        return bool(np.all(self.mean == 0.0))

    @property
    def is_unit(self) -> bool:
        """True for exactly N(0, I): zero mean, isotropic variance 1."""
        return self.is_zero_mean and self.is_isotropic and self.cov == 1.0

    def mean_vector(self) -> np.ndarray:
        if np.isscalar(self.mean):
            return np.full(self.dim, self.mean, dtype=np.float64)
        return np.array(self.mean, dtype=np.float64)

    def var_vector(self) -> np.ndarray:
        if np.isscalar(self.cov):
            return np.full(self.dim, self.cov, dtype=np.float64)
        return np.array(self.cov, dtype=np.float64)

    def sigma_vector(self) -> np.ndarray:
        return np.sqrt(self.var_vector())

    def standardize(self, x: np.ndarray) -> np.ndarray:
        """(x - mu) / sigma, componentwise."""
        check_dim(x, self)
        return (x - self.mean_vector()) / self.sigma_vector()

    def unstandardize(self, z: np.ndarray) -> np.ndarray:
        """z * sigma + mu, the inverse affine map."""
        check_dim(z, self)
        return z * self.sigma_vector() + self.mean_vector()

    @classmethod
    def unit(cls, dim: int) -> "GaussianSpec":
        return cls(dim=dim, mean=0.0, cov=1.0)


def check_dim(x: np.ndarray, spec: GaussianSpec) -> None:
    if x.shape[-1] != spec.dim:
        raise DimensionMismatch(f"vector has length {x.shape[-1]}, spec dim is {spec.dim}")


@dataclass(frozen=True)
class WeightVec:
    """Combination weights with their derived statistics.

    alpha and beta are always recomputed from the weights on construction,
    by simple sequential summation (index order). K is small in practice, so
    no compensated summation is used.
    """

    weights: np.ndarray
    alpha: float = field(init=False)
    beta: float = field(init=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        if w.ndim != 1:
            raise ValueError(f"weights must be 1-D, got shape {w.shape}")
        if w.shape[0] == 0:
            raise ValueError("weights must be non-empty")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        object.__setattr__(self, "weights", _readonly(w))
        alpha = 0.0
        beta = 0.0
        for wk in w:
            wk = float(wk)
            alpha += wk
            beta += wk * wk
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @property
    def k(self) -> int:
        return int(self.weights.shape[0])


def combination_stats(weights) -> WeightVec:
    """Weight vector with alpha = sum w_k and beta = sum w_k^2."""
    if isinstance(weights, WeightVec):
        return weights
    return WeightVec(weights=weights)


def linear_combine(latents, weights) -> np.ndarray:
    """y_d = sum_k w_k * x^(k)_d, accumulated sequentially over k."""
    wv = combination_stats(weights)
    if len(latents) != wv.k:
        raise DimensionMismatch(f"{len(latents)} latents but {wv.k} weights")
    xs = [as_latent(x) for x in latents]
    dim = xs[0].shape[0]
    for x in xs[1:]:
        if x.shape[0] != dim:
            raise DimensionMismatch(f"latent lengths differ: {x.shape[0]} vs {dim}")
    w = wv.weights
    y = w[0] * xs[0]
    for k in range(1, wv.k):
        y += w[k] * xs[k]
    return y


def cog_transform(y, weights, spec: GaussianSpec) -> np.ndarray:
    """Correct a linear combination back to N(mu, Sigma).

    z = (1 - alpha/sqrt(beta)) * mu + y / sqrt(beta). With selector weights
    (alpha = beta = 1) the shift coefficient is exactly zero and the scale is
    exactly one, so z reproduces y bit-for-bit.
    """
    wv = combination_stats(weights)
    y = as_latent(y)
    check_dim(y, spec)
    if wv.beta <= BETA_MIN:
        raise DegenerateWeights(
            f"beta = {wv.beta:.3g} is at or below {BETA_MIN:g}; weights are all zero or vanishing"
        )
    root_beta = np.sqrt(wv.beta)
    shift_coef = 1.0 - wv.alpha / root_beta
    return shift_coef * spec.mean_vector() + y / root_beta


def cog_combine(latents, weights, spec: GaussianSpec) -> np.ndarray:
    """linear_combine followed by cog_transform, sharing one WeightVec."""
    wv = combination_stats(weights)
    y = linear_combine(latents, wv)
    return cog_transform(y, wv, spec)
