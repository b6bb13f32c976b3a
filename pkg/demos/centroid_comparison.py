"""Average a group of latents four ways and compare typicality.

The plain euclidean mean of K independent gaussians has variance 1/K, so
its norm is far too small and its density is far too high. The rescaling
baselines fix the norm by construction. The corrected centroid fixes the
whole distribution, not just the norm.
"""

import math

import numpy as np

from cogl import CentroidMethod, GaussianSpec, centroid, sample_latents, typicality_report

D = 2048
K = 6
spec = GaussianSpec.unit(D)
group = sample_latents(spec, K, seed=77)

print(f"{K} latents, dim {D}, typical norm is about sqrt(D) = {math.sqrt(D):.2f}")
print()
print("method           norm     log density   norm percentile")
for method in CentroidMethod:
    c = centroid(group, method, spec)
    rep = typicality_report(c, spec)
    # percentile of the squared norm under chi2(D)
    pct = math.exp(rep.norm_log_cdf)
    print(f"{method.value:15s} {rep.norm:8.2f}  {rep.log_density:12.1f}   {pct:12.4f}")

print()
euc = centroid(group, CentroidMethod.EUCLIDEAN, spec)
cog = centroid(group, CentroidMethod.COG, spec)
print(f"corrected centroid / euclidean mean = {np.mean(cog / euc):.4f}"
      f" (sqrt(K) = {math.sqrt(K):.4f} for zero mean)")
