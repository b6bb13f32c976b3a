"""Navigable subspaces spanned by K latents.

build_basis factors the latent matrix A (columns = latents) as A = U R by
Householder QR, with R's diagonal forced positive so the factorization is
unique and reproducible. U's columns are an orthonormal basis of the spanned
subspace; projection is U U^T x, coordinates are h = U^T x, and combination
weights of any in-subspace vector come back through the pseudoinverse
A^+ = R^-1 U^T (valid at full column rank).

No BLAS-backed products anywhere in this module: contractions go through
np.einsum (optimize=False) and explicit K-loops, whose results do not depend
on thread settings.
"""

from dataclasses import dataclass

import numpy as np

from .core import GaussianSpec, WeightVec, as_latent, cog_transform, combination_stats
from .errors import DimensionMismatch, NotInSubspace, RankDeficient

# |R_kk| below rank_tol relative to the column norm marks a dependent column.
RANK_TOL = 1e-10
# Residual above resid_tol relative to ||s|| marks a vector outside the span.
RESID_TOL = 1e-8


@dataclass(frozen=True)
class SubspaceBasis:
    """Original latents A (D x K), factors U and R, cached pseudoinverse."""

    A: np.ndarray
    U: np.ndarray
    R: np.ndarray
    A_pinv: np.ndarray

    @property
    def dim(self) -> int:
        return int(self.A.shape[0])

    @property
    def k(self) -> int:
        return int(self.A.shape[1])


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def _house_apply(v: np.ndarray, block: np.ndarray) -> None:
    # block -= 2 v (v^T block), in place; v is unit norm
    proj = np.einsum("i,ij->j", v, block, optimize=False)
    block -= 2.0 * np.outer(v, proj)


def build_basis(latents) -> SubspaceBasis:
    """Factor K latents into a positive-diagonal Householder QR basis.

    Deterministic: identical input yields bit-identical factors.
    """
    if len(latents) == 0:
        raise ValueError("build_basis needs at least one latent")
    xs = [as_latent(x) for x in latents]
    d = xs[0].shape[0]
    for x in xs[1:]:
        if x.shape[0] != d:
            raise DimensionMismatch(f"latent lengths differ: {x.shape[0]} vs {d}")
    k = len(xs)
    if k > d:
        raise RankDeficient(f"{k} latents in dimension {d} cannot be linearly independent")

    a = np.stack(xs, axis=1)
    col_norms = np.sqrt(np.einsum("dk,dk->k", a, a, optimize=False))

    work = a.copy()
    reflectors = np.zeros((d, k))
    for j in range(k):
        x = work[j:, j]
        normx = np.sqrt(float(np.einsum("i,i->", x, x, optimize=False)))
        if normx == 0.0:
            continue  # column already zero below the diagonal; rank check will see R_jj
        sign = 1.0 if x[0] >= 0.0 else -1.0
        alpha = -sign * normx
        v = x.copy()
        v[0] -= alpha  # v0 = x0 + sign*normx, no cancellation
        v /= np.sqrt(float(np.einsum("i,i->", v, v, optimize=False)))
        _house_apply(v, work[j:, j:])
        work[j, j] = alpha
        work[j + 1:, j] = 0.0
        reflectors[j:, j] = v

    r = np.triu(work[:k, :])

    for j in range(k):
        if col_norms[j] == 0.0 or abs(r[j, j]) < RANK_TOL * col_norms[j]:
            raise RankDeficient(
                f"column {j} is linearly dependent (|R_jj| = {abs(r[j, j]):.3g}, "
                f"column norm = {col_norms[j]:.3g})"
            )

    # accumulate the thin Q factor by applying the reflectors, last first,
    # to the leading K columns of the identity
    u = np.zeros((d, k))
    for j in range(k):
        u[j, j] = 1.0
    for j in reversed(range(k)):
        v = reflectors[j:, j]
        if np.any(v != 0.0):
            _house_apply(v, u[j:, :])

    # sign convention: R's diagonal positive (negate U column / R row pairs)
    for j in range(k):
        if r[j, j] < 0.0:
            r[j, :] = -r[j, :]
            u[:, j] = -u[:, j]

    r_inv = _upper_tri_inverse(r)
    a_pinv = np.einsum("ij,dj->id", r_inv, u, optimize=False)

    return SubspaceBasis(A=_readonly(a), U=_readonly(u), R=_readonly(r), A_pinv=_readonly(a_pinv))


def _upper_tri_inverse(r: np.ndarray) -> np.ndarray:
    k = r.shape[0]
    inv = np.zeros((k, k))
    for c in range(k):
        for i in reversed(range(c + 1)):
            acc = 1.0 if i == c else 0.0
            acc -= float(np.einsum("j,j->", r[i, i + 1:c + 1], inv[i + 1:c + 1, c], optimize=False))
            inv[i, c] = acc / r[i, i]
    return inv


def _check_latent(basis: SubspaceBasis, x) -> np.ndarray:
    x = as_latent(x)
    if x.shape[0] != basis.dim:
        raise DimensionMismatch(f"vector has length {x.shape[0]}, basis dim is {basis.dim}")
    return x


def coords(basis: SubspaceBasis, x) -> np.ndarray:
    """Subspace coordinates h = U^T x."""
    x = _check_latent(basis, x)
    return np.einsum("dk,d->k", basis.U, x, optimize=False)


def project(basis: SubspaceBasis, x) -> np.ndarray:
    """Orthogonal projection U U^T x onto the spanned subspace."""
    x = _check_latent(basis, x)
    h = np.einsum("dk,d->k", basis.U, x, optimize=False)
    return np.einsum("dk,k->d", basis.U, h, optimize=False)


def recover_weights(basis: SubspaceBasis, s) -> WeightVec:
    """Combination weights w = A^+ s of an in-subspace vector.

    Raises NotInSubspace when A w fails to reconstruct s within RESID_TOL
    relative to ||s||; project first for arbitrary vectors.
    """
    s = _check_latent(basis, s)
    w = np.einsum("kd,d->k", basis.A_pinv, s, optimize=False)
    recon = np.einsum("dk,k->d", basis.A, w, optimize=False)
    diff = recon - s
    resid = np.sqrt(float(np.einsum("d,d->", diff, diff, optimize=False)))
    s_norm = np.sqrt(float(np.einsum("d,d->", s, s, optimize=False)))
    if resid > RESID_TOL * s_norm:
        raise NotInSubspace(
            f"residual {resid:.3g} exceeds {RESID_TOL:g} * ||s|| = {RESID_TOL * s_norm:.3g}"
        )
    return combination_stats(w)


def latent_at(basis: SubspaceBasis, h, spec: GaussianSpec) -> np.ndarray:
    """Corrected latent for subspace coordinates h.

    y = U h is the in-subspace point, w = A^+ y its combination weights, and
    the returned vector is the correction transform of (y, w) under spec.
    """
    h = np.asarray(h, dtype=np.float64)
    if h.ndim != 1 or h.shape[0] != basis.k:
        raise DimensionMismatch(f"coords must have length {basis.k}, got shape {h.shape}")
    if not np.all(np.isfinite(h)):
        raise ValueError("coords must be finite")
    y = np.einsum("dk,k->d", basis.U, h, optimize=False)
    w = np.einsum("kd,d->k", basis.A_pinv, y, optimize=False)
    return cog_transform(y, combination_stats(w), spec)


def grid_coords(basis: SubspaceBasis, center, dim_i: int, dim_j: int,
                half_extent: float, rows: int, cols: int) -> list:
    """Row-major grid of coordinate vectors around a center latent.

    The grid is anchored at h0 = coords(basis, center); components dim_i and
    dim_j sweep uniform ranges [h0 - half_extent, h0 + half_extent] (rows and
    cols points respectively), all other components stay at h0. A single-point
    axis stays exactly at the center, so odd x odd grids contain h0 itself.
    """
    if dim_i == dim_j:
        raise ValueError("grid dimensions must differ")
    for name, idx in (("dim_i", dim_i), ("dim_j", dim_j)):
        if not 0 <= idx < basis.k:
            raise ValueError(f"{name} = {idx} out of range for K = {basis.k}")
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be >= 1")
    half_extent = float(half_extent)
    if not half_extent > 0.0:
        raise ValueError(f"half_extent must be positive, got {half_extent}")

    h0 = coords(basis, center)

    def offsets(n: int) -> np.ndarray:
        if n == 1:
            return np.zeros(1)
        return np.linspace(-half_extent, half_extent, n)

    out = []
    for oi in offsets(rows):
        for oj in offsets(cols):
            h = h0.copy()
            h[dim_i] += oi
            h[dim_j] += oj
            out.append(h)
    return out
