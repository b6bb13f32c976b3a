"""Statistically correct linear combination of Gaussian latent vectors.

A linear combination of i.i.d. Gaussian latents drifts off their prior:
y = sum_k w_k x^(k) has law N(alpha*mu, beta*Sigma) with alpha = sum w_k and
beta = sum w_k^2. The correction transform z = (1 - alpha/sqrt(beta))*mu +
y/sqrt(beta) restores N(mu, Sigma) exactly. On top of it sit interpolation
and centroid schemes, QR-based navigable subspaces, chi-squared typicality
diagnostics, a deterministic seeded sampler, a binary latent container, and
the `cogl` command-line tool.
"""

from .core import (
    BETA_MIN,
    GaussianSpec,
    WeightVec,
    as_latent,
    cog_combine,
    cog_transform,
    combination_stats,
    linear_combine,
)
from .diagnostics import (
    DistributionCheck,
    IntervalEstimate,
    TypicalityReport,
    check_cog_distribution,
    chi2_log_cdf,
    chi2_log_sf,
    chi2_mode,
    estimate_slerp_beta_ci,
    gaussian_log_density,
    sample_latents,
    typicality_report,
)
from .errors import (
    BadDtype,
    BadMagic,
    BadVersion,
    CoglError,
    DegenerateCentroid,
    DegenerateWeights,
    DimensionMismatch,
    LatentFileError,
    NotInSubspace,
    PayloadSizeMismatch,
    RankDeficient,
    SpecConfigError,
)
from .io import load_spec_config, parse_spec_config, read_latents, write_latents
from .schemes import (
    SIN_THETA_MIN,
    CentroidMethod,
    InterpolationMethod,
    canonical_order,
    centroid,
    interpolate,
    lerp_weights,
    slerp_weights,
)
from .subspace import (
    RANK_TOL,
    RESID_TOL,
    SubspaceBasis,
    build_basis,
    coords,
    grid_coords,
    latent_at,
    project,
    recover_weights,
)

__version__ = "0.1.0"
