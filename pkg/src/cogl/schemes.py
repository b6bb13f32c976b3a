"""Interpolation weight schemes and centroid schemes.

Interpolation methods: lerp (plain linear combination), slerp (spherical
weights, left uncorrected since it is the classical baseline), and cog
(linear weights followed by the correction transform). Centroid methods:
the plain Euclidean mean, its standardized and mode-norm rescalings, and the
corrected uniform combination.
"""

import math
from enum import Enum

import numpy as np

from .core import GaussianSpec, WeightVec, as_latent, check_dim, cog_combine, combination_stats, linear_combine
from .errors import DegenerateCentroid

# Below this, sin(theta) makes the spherical weight formula 0/0 and the
# endpoints are treated as collinear: fall back to linear weights.
SIN_THETA_MIN = 1e-8


class InterpolationMethod(Enum):
    LERP = "lerp"
    SLERP = "slerp"
    COG = "cog"

    @classmethod
    def parse(cls, name: str) -> "InterpolationMethod":
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown interpolation method {name!r} (expected one of: {valid})") from None


class CentroidMethod(Enum):
    EUCLIDEAN = "euclidean"
    STANDARDIZED_EUCLIDEAN = "std-euclidean"
    MODE_NORM_EUCLIDEAN = "mode-norm"
    COG = "cog"

    @classmethod
    def parse(cls, name: str) -> "CentroidMethod":
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown centroid method {name!r} (expected one of: {valid})") from None


def _check_v(v) -> float:
    v = float(v)
    if math.isnan(v) or not 0.0 <= v <= 1.0:
        raise ValueError(f"interpolation parameter must be in [0, 1], got {v}")
    return v


def lerp_weights(v) -> WeightVec:
    """Linear interpolation weights [v, 1 - v]; alpha is always 1."""
    v = _check_v(v)
    return combination_stats([v, 1.0 - v])


def slerp_weights(v, x1, x2) -> WeightVec:
    """Spherical interpolation weights [sin(v*theta), sin((1-v)*theta)] / sin(theta).

    theta is the angle between the endpoints, its cosine clamped to [-1, 1]
    before arccos to absorb rounding. Near-collinear endpoints
    (sin(theta) < SIN_THETA_MIN) fall back to lerp_weights(v); that fallback
    is a defined behavior, not an error.
    """
    v = _check_v(v)
    x1 = as_latent(x1)
    x2 = as_latent(x2)
    if x1.shape[0] != x2.shape[0]:
        raise ValueError(f"endpoint lengths differ: {x1.shape[0]} vs {x2.shape[0]}")
    n1 = math.sqrt(float(np.sum(x1 * x1)))
    n2 = math.sqrt(float(np.sum(x2 * x2)))
    if n1 == 0.0 or n2 == 0.0:
        raise ValueError("spherical weights need nonzero-norm endpoints")
    c = float(np.sum(x1 * x2)) / (n1 * n2)
    c = min(1.0, max(-1.0, c))
    theta = math.acos(c)
    st = math.sin(theta)
    if st < SIN_THETA_MIN:
        return lerp_weights(v)
    return combination_stats([math.sin(v * theta) / st, math.sin((1.0 - v) * theta) / st])


def interpolate(x1, x2, v, method: InterpolationMethod, spec: GaussianSpec) -> np.ndarray:
    """Point at parameter v on the path from x2 (v=0) to x1 (v=1)."""
    if isinstance(method, str):
        method = InterpolationMethod.parse(method)
    v = _check_v(v)
    x1 = as_latent(x1)
    x2 = as_latent(x2)
    check_dim(x1, spec)
    check_dim(x2, spec)
    if method is InterpolationMethod.LERP:
        return linear_combine([x1, x2], lerp_weights(v))
    if method is InterpolationMethod.SLERP:
        # the classical baseline: spherical weights, no correction
        return linear_combine([x1, x2], slerp_weights(v, x1, x2))
    return cog_combine([x1, x2], lerp_weights(v), spec)


def canonical_order(latents) -> list:
    """Latents sorted by a fixed total order (their component bytes).

    Centroids sum in this order, which is what makes them exactly invariant
    under permutation of their inputs.
    """
    xs = [as_latent(x) for x in latents]
    return sorted(xs, key=lambda x: x.tobytes())


def centroid(latents, method: CentroidMethod, spec: GaussianSpec) -> np.ndarray:
    """Centroid of K latents under the chosen scheme.

    The standardized and mode-norm schemes operate in standardized
    coordinates ((x - mu)/sigma) and map the result back through
    z*sigma + mu, so every scheme accepts any diagonal spec. For the unit
    spec both maps are identities and the classical definitions apply
    verbatim.
    """
    if isinstance(method, str):
        method = CentroidMethod.parse(method)
    if len(latents) == 0:
        raise ValueError("centroid needs at least one latent")
    xs = canonical_order(latents)
    k = len(xs)
    for x in xs:
        check_dim(x, spec)

    if method is CentroidMethod.COG:
        return cog_combine(xs, np.full(k, 1.0 / k), spec)

    acc = xs[0].copy()
    for x in xs[1:]:
        acc += x
    xbar = acc / k

    if method is CentroidMethod.EUCLIDEAN:
        return xbar

    zbar = spec.standardize(xbar)
    if method is CentroidMethod.STANDARDIZED_EUCLIDEAN:
        m = float(np.mean(zbar))
        s = math.sqrt(float(np.mean((zbar - m) ** 2)))
        if s == 0.0:
            raise DegenerateCentroid("mean latent is constant; standardized centroid undefined")
        return spec.unstandardize((zbar - m) / s)

    # mode-norm: rescale so the norm hits the chi-squared density argmax
    d = spec.dim
    if d < 3:
        raise ValueError(f"mode-norm centroid needs dim >= 3, got {d}")
    norm = math.sqrt(float(np.sum(zbar * zbar)))
    if norm == 0.0:
        raise DegenerateCentroid("mean latent has zero norm; mode-norm rescaling undefined")
    return spec.unstandardize(zbar * (math.sqrt(d - 2.0) / norm))
