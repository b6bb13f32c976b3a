"""Navigate the subspace spanned by a handful of anchor latents.

build_basis QR-factors the anchors into an orthonormal frame. Coordinates
in that frame are just dot products, and latent_at maps coordinates back
to a corrected latent, so every grid cell is as typical as a fresh draw.
"""

import numpy as np

from cogl import (
    GaussianSpec,
    build_basis,
    coords,
    grid_coords,
    latent_at,
    recover_weights,
    sample_latents,
)

D = 512
spec = GaussianSpec.unit(D)
anchors = sample_latents(spec, 3, seed=11)
basis = build_basis(anchors)

print(f"{basis.k} anchors in dim {basis.dim}")
print("R diagonal (anchor norms after orthogonalization):",
      np.array_str(np.diag(basis.R), precision=2))
print()

# each anchor has a coordinate vector; feeding it back reproduces the anchor
for j, anchor in enumerate(anchors):
    h = coords(basis, anchor)
    back = latent_at(basis, h, spec)
    err = np.abs(back - anchor).max()
    print(f"anchor {j}: coords = {np.array_str(h, precision=2)}, "
          f"round-trip error = {err:.2e}")

print()
print("3x3 grid through anchor 0, sweeping coordinates 0 and 1:")
grid = grid_coords(basis, anchors[0], 0, 1, half_extent=8.0, rows=3, cols=3)
for r in range(3):
    row = []
    for c in range(3):
        z = latent_at(basis, grid[r * 3 + c], spec)
        row.append(np.sum(z * z) / D)
    print("  " + "  ".join(f"{v:6.3f}" for v in row))
print("squared norm per dim stays near 1 across the whole grid")

print()
blend = latent_at(basis, np.array([5.0, -3.0, 2.0]), spec)
w = recover_weights(basis, basis.U @ np.array([5.0, -3.0, 2.0]))
print("weights of the in-span point behind a corrected blend:",
      np.array_str(w.weights, precision=3))
print(f"alpha = {w.alpha:.3f}, beta = {w.beta:.3f}")
