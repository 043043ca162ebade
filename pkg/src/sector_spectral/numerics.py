"""Dense symmetric eigensolvers, regularized Hermitian solves, and seeded sampling.

Everything downstream (filter banks, forecasters, data generators) is built on
the handful of kernels in this module so that numerical conventions are fixed
in exactly one place.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg


# ---------------------------------------------------------------------------
# Random streams
# ---------------------------------------------------------------------------

def rng_stream(seed, *path):
    """Independent Philox generator for the stream labelled ``(seed, *path)``.

    Philox is counter-based, so streams with distinct spawn keys are
    independent and reproducible regardless of how many draws other streams
    have consumed. All randomness in the package flows through these streams;
    there is no global RNG state.
    """
    key = tuple(int(p) for p in path)
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=key)
    return np.random.Generator(np.random.Philox(ss))


def complex_gaussian(dim, rng):
    """Standard complex Gaussian vector with unit variance per entry.

    Each entry is (a + ib)/sqrt(2) with a, b independent standard normals, so
    E|z|^2 = 1. The real parts are drawn as one block and the imaginary parts
    as a second block, which pins the draw order for reproducibility.
    """
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    z = rng.standard_normal((2, dim))
    return (z[0] + 1j * z[1]) / np.sqrt(2.0)


# ---------------------------------------------------------------------------
# Symmetric eigendecomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues sorted descending with matching orthonormal eigenvectors.

    ``eigenvalues[i]`` pairs with column ``eigenvectors[:, i]``. Raw values are
    reported as computed; small negative values (numerical PSD fuzz) are kept
    and must be clamped by consumers that need singular values.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def clamped(self):
        """Eigenvalues with negative numerical fuzz clamped to zero."""
        return np.maximum(self.eigenvalues, 0.0)


def sym_eig(M, asym_tol=1e-12):
    """Full eigendecomposition of a real symmetric matrix, descending order.

    Raises if ``M`` is not square or has max-entry asymmetry above
    ``asym_tol``. The input is symmetrized before the solve so the result is
    well-defined for inputs within tolerance.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        raise ValueError("empty matrix")
    asym = float(np.abs(M - M.T).max())
    if asym > asym_tol:
        raise ValueError(f"asymmetry {asym:.3e} exceeds tolerance {asym_tol:.1e}")
    vals, vecs = np.linalg.eigh(0.5 * (M + M.T))
    return EigenDecomposition(vals[::-1].copy(), vecs[:, ::-1].copy())


def jacobi_sym_eig(M, dtype=np.longdouble, max_sweeps=30):
    """Cyclic Jacobi eigendecomposition, independent of LAPACK.

    Runs in ``dtype`` (80-bit extended on x86 by default), which resolves
    eigenvalues down to roughly 1e-19 * sigma_1 where the double-precision
    solver bottoms out near 1e-16 * sigma_1. Deterministic: fixed sweep order,
    no BLAS dispatch. Used as the oracle for sym_eig and for tail eigenpairs
    of severely ill-conditioned matrices.
    """
    A = np.array(M, dtype=dtype)
    n = A.shape[0]
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    V = np.eye(n, dtype=dtype)
    eps = np.finfo(dtype).eps
    stop = eps * max(1.0, float(np.abs(np.diag(A)).max()))
    one = dtype(1.0)
    for _ in range(max_sweeps):
        off = float(max(np.abs(A[p, p + 1:]).max(initial=0.0) for p in range(n - 1)))
        if off < stop:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < stop * 1e-2:
                    continue
                theta = (A[q, q] - A[p, p]) / (2 * apq)
                if theta == 0:
                    t = one
                else:
                    t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + one))
                c = one / np.sqrt(t * t + one)
                s = t * c
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * cp - s * cq
                A[:, q] = s * cp + c * cq
                rp, rq = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * rp - s * rq
                A[q, :] = s * rp + c * rq
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    vals = np.diag(A).copy()
    order = np.argsort(vals, kind="stable")[::-1]
    return EigenDecomposition(vals[order], V[:, order])


# ---------------------------------------------------------------------------
# Regularized Hermitian solves
# ---------------------------------------------------------------------------

def regularized_solve(V, lam, b, herm_tol=1e-10):
    """Solve (V + lam*I) x = b for Hermitian PSD ``V`` and ``lam > 0``.

    This is the full-recompute path; it is the oracle against which any
    incrementally maintained factorization must agree to 1e-8 relative
    residual.
    """
    V = np.asarray(V)
    b = np.asarray(b, dtype=complex)
    if lam <= 0:
        raise ValueError(f"lam must be positive, got {lam}")
    if V.ndim != 2 or V.shape[0] != V.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {V.shape}")
    if b.shape != (V.shape[0],):
        raise ValueError(f"rhs shape {b.shape} does not match matrix {V.shape}")
    herm = float(np.abs(V - V.conj().T).max())
    scale = max(1.0, float(np.abs(V).max()))
    if herm > herm_tol * scale:
        raise ValueError(f"matrix is not Hermitian: deviation {herm:.3e}")
    A = V + lam * np.eye(V.shape[0])
    x = np.linalg.solve(A, b)
    resid = np.linalg.norm(A @ x - b)
    if resid > 1e-8 * max(np.linalg.norm(b), 1e-300):
        raise FloatingPointError(f"solve residual {resid:.3e} too large")
    return x


def cholesky_update(L, x):
    """Cholesky factor of L L^H + x x^H in O(k^2). Inputs are not modified.

    ``L`` must be lower triangular with real positive diagonal; the returned
    factor has the same property.
    """
    L = np.array(L, dtype=complex)
    x = np.array(x, dtype=complex)
    k = L.shape[0]
    for j in range(k):
        a = L[j, j].real
        r = np.sqrt(a * a + abs(x[j]) ** 2)
        c = r / a
        s = x[j] / a
        L[j, j] = r
        if j + 1 < k:
            L[j + 1:, j] = (L[j + 1:, j] + np.conj(s) * x[j + 1:]) / c
            x[j + 1:] = c * x[j + 1:] - s * L[j + 1:, j]
    return L


def cholesky_solve(L, b):
    """Solve (L L^H) x = b given a lower-triangular Cholesky factor."""
    y = scipy.linalg.solve_triangular(L, b, lower=True)
    return scipy.linalg.solve_triangular(L.conj().T, y, lower=False)
