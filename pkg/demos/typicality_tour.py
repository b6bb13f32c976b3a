"""Place latents on the two typicality axes: norm and density.

High-dimensional gaussians live on a thin shell of radius sqrt(D). The
density axis rewards points near the origin that no sampler ever visits,
which is why both axes are reported. The log-space chi-squared tails stay
finite even when the probabilities underflow any float.
"""

import math

from cogl import GaussianSpec, chi2_log_cdf, chi2_log_sf, sample_latents, typicality_report

D = 36864
spec = GaussianSpec.unit(D)
x = sample_latents(spec, 1, seed=5)[0]

for label, point in [
    ("fresh sample", x),
    ("origin", 0.0 * x),
    ("sample * 0.95", 0.95 * x),
    ("sample * 1.05", 1.05 * x),
]:
    rep = typicality_report(point, spec)
    print(f"{label:14s} norm = {rep.norm:8.2f}  log density = {rep.log_density:11.1f}  "
          f"log sf = {rep.norm_log_sf:10.3f}")

print()
print(f"typical shell radius sqrt({D}) = {math.sqrt(D):.1f}")
print()

# tails far beyond float range, reported in log10
for r in (186.21, 192.0, 197.83):
    c = chi2_log_cdf(r * r, D) / math.log(10.0)
    s = chi2_log_sf(r * r, D) / math.log(10.0)
    print(f"norm {r:7.2f}: log10 P(below) = {c:10.2f}, log10 P(above) = {s:10.2f}")
