"""From a driven quantum system to a sector-bounded linear system.

A weakly driven n-level system sampled every dt seconds is, after
vectorizing the density matrix, an exact linear time-invariant system whose
transition spectrum lives on the unit circle at the Bohr frequencies
(E_j - E_k) * dt. The largest energy gap times dt is therefore the smallest
admissible sector angle beta.

Run:  python demos/04_quantum_linear_response.py
"""

import numpy as np

from sector_spectral import (bohr_beta, linear_response_trajectory,
                             liouvillian, lti_convolution_response,
                             random_quantum_system, rng_stream)

sys = random_quantum_system(n=3, dt=0.25, seed=5)
A, B, C = liouvillian(sys)

E = np.linalg.eigvalsh(sys.H0)
print("H0 energies:", np.round(E, 4))
print("admissible sector angle beta >=", f"{bohr_beta(sys):.4f} rad")

# Liouvillian eigenphases are exactly the Bohr frequencies
phases = np.sort(np.angle(np.linalg.eigvals(A)))
bohr = np.sort(((E[None, :] - E[:, None]) * sys.dt).ravel())
print("max |eigenphase - Bohr frequency * dt|:",
      f"{np.abs(phases - bohr).max():.2e}")
print("Liouvillian unitary to:",
      f"{np.abs(A.conj().T @ A - np.eye(A.shape[0])).max():.2e}")

# the vectorized (A, B, C) convolution reproduces the density-matrix physics
u = rng_stream(6).standard_normal(300)
y_lti = lti_convolution_response(A, B, C, u, W=300)
y_direct = linear_response_trajectory(sys, u)
print("LTI convolution vs direct density-matrix evolution:",
      f"{np.abs(y_lti - y_direct).max():.2e}")
