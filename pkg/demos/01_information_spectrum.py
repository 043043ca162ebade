"""The sector information matrix and its spectral cliff.

The Gram matrix of all monomial trajectories [1, z, ..., z^{W-1}] over the
spectral sector {|z| <= 1, |arg z| <= beta} separates entrywise into a radial
(Hankel) factor and an angular (sinc-Toeplitz) factor. Its eigenvalues
collapse right after the Shannon number k* = ceil(beta*W/pi): that cliff is
the whole story behind learning these systems with k* parameters instead of W.

Run:  python demos/01_information_spectrum.py
"""

import numpy as np

from sector_spectral import (SectorParams, effective_dimension, info_matrix,
                             info_matrix_quadrature, spectrum_report)

# --- closed form vs direct numerical integration ---------------------------

params = SectorParams(W=6, beta=0.7)
im = info_matrix(params)
quad = info_matrix_quadrature(params, n_r=256, n_theta=256)
print("closed form vs 2-D quadrature, max entry difference:",
      f"{np.abs(im.Z - quad.matrix).max():.3e}")

# --- the Hadamard split -----------------------------------------------------

print("entrywise Hankel*Toeplitz reconstruction error:",
      f"{np.abs(im.Z - im.hankel * im.toeplitz).max():.3e}")

# --- the cliff at k* --------------------------------------------------------

for W, beta_mult in ((100, 0.2), (100, 0.5), (400, 0.5)):
    params = SectorParams(W, beta_mult * np.pi)
    rep = spectrum_report(params)
    k = effective_dimension(params)
    vals = rep.eigenvalues
    print(f"\nW={W}, beta={beta_mult}pi  ->  k* = {k}")
    for i in (1, k // 2, k, min(int(1.2 * k), W), min(int(1.5 * k), W)):
        print(f"  sigma_{i:<4d} = {vals[i - 1]:.3e}   (ratio {vals[i - 1] / vals[0]:.1e})")
    print(f"  eigenvalue mass beyond k*: {vals[k:].sum() / vals.sum():.2e}")
