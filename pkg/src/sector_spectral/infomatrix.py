"""The sector information matrix, its Hankel/Toeplitz factors, and its spectrum.

The central object is the W x W Gram matrix of monomial trajectories
mu_W(z) = [1, z, ..., z^{W-1}] integrated over the spectral sector
{|z| <= 1, |arg z| <= beta} under the area measure. Its closed form

    Z[j, k] = 2*beta/(j+k+2) * sinc((j-k)*beta),     sinc(x) = sin(x)/x

factors entrywise into a Hankel matrix 1/(j+k+2) (radial decay) and a
Toeplitz sinc kernel 2*beta*sinc((j-k)*beta) (angular oscillation). The
Toeplitz factor is 2*pi times the classical prolate matrix with bandwidth
fraction beta/(2*pi), so the spectrum collapses after the Shannon number
k* = ceil(beta*W/pi).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .numerics import EigenDecomposition, sym_eig

# Guard against half-ulp overshoot in beta*W/pi when beta is a multiple of pi,
# e.g. 0.5*pi*100/pi must give k* = 50, not 51.
_CEIL_FUZZ = 1e-9


@dataclass(frozen=True)
class SectorParams:
    """Window length W and spectral half-angle beta (radians, 0 < beta <= pi)."""

    W: int
    beta: float

    def __post_init__(self):
        if self.W < 1:
            raise ValueError(f"W must be >= 1, got {self.W}")
        if not 0.0 < self.beta <= np.pi + 1e-12:
            raise ValueError(f"beta must be in (0, pi], got {self.beta}")


def effective_dimension(params: SectorParams) -> int:
    """Shannon number of the (bandwidth beta, window W) pair: ceil(beta*W/pi)."""
    x = params.beta * params.W / np.pi
    return int(np.ceil(x - _CEIL_FUZZ))


def hankel_factor(W: int) -> np.ndarray:
    """Radial factor with entries 1/(j+k+2), zero-based j, k.

    Entry (j, k) is the moment integral of r^{j+k+1} dr over [0, 1].
    """
    if W < 1:
        raise ValueError(f"W must be >= 1, got {W}")
    j = np.arange(W, dtype=float)
    return 1.0 / (j[:, None] + j[None, :] + 2.0)


def slepian_toeplitz_factor(W: int, beta: float) -> np.ndarray:
    """Angular factor 2*sin((j-k)*beta)/(j-k) off-diagonal, 2*beta on it."""
    SectorParams(W, beta)
    j = np.arange(W, dtype=float)
    d = j[:, None] - j[None, :]
    out = np.full((W, W), 2.0 * beta)
    nz = d != 0
    out[nz] = 2.0 * np.sin(d[nz] * beta) / d[nz]
    return out


def _closed_form(W, beta):
    j = np.arange(W, dtype=float)
    jk = j[:, None] + j[None, :]
    d = j[:, None] - j[None, :]
    sinc = np.ones((W, W))
    nz = d != 0
    sinc[nz] = np.sin(d[nz] * beta) / (d[nz] * beta)
    return 2.0 * beta / (jk + 2.0) * sinc


@dataclass
class InfoMatrix:
    """Closed-form Z with its entrywise factors and a lazily computed spectrum."""

    params: SectorParams
    Z: np.ndarray
    hankel: np.ndarray
    toeplitz: np.ndarray
    _eig: EigenDecomposition | None = field(default=None, repr=False)

    @property
    def eig(self) -> EigenDecomposition:
        if self._eig is None:
            self._eig = sym_eig(self.Z)
        return self._eig

    @property
    def k_star(self) -> int:
        return effective_dimension(self.params)

    def clamped_eigenvalues(self):
        return self.eig.clamped()


def info_matrix(params: SectorParams) -> InfoMatrix:
    """Build Z from the closed form, attaching both entrywise factors."""
    Z = _closed_form(params.W, params.beta)
    Z = 0.5 * (Z + Z.T)
    return InfoMatrix(
        params=params,
        Z=Z,
        hankel=hankel_factor(params.W),
        toeplitz=slepian_toeplitz_factor(params.W, params.beta),
    )


# ---------------------------------------------------------------------------
# Quadrature oracle for the defining sector integral
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureResult:
    matrix: np.ndarray
    imag_residual: float
    coarse_grid: bool      # n_theta below the 8*W resolution heuristic


def simpson_weights(n_intervals: int, a: float, b: float):
    """Nodes and weights of the composite Simpson rule with n (even) intervals."""
    if n_intervals < 2:
        raise ValueError("need at least 2 intervals")
    if n_intervals % 2:
        n_intervals += 1
    x = np.linspace(a, b, n_intervals + 1)
    h = (b - a) / n_intervals
    w = np.full(n_intervals + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    return x, w * h / 3.0


def info_matrix_quadrature(params: SectorParams, n_r: int, n_theta: int) -> QuadratureResult:
    """Numerically integrate mu_W(z) mu_W(z)^H r dr dtheta over the sector.

    Uses Gauss-Legendre nodes in r on [0, 1] (exact for the polynomial radial
    integrand) and a composite Simpson rule in theta on [-beta, beta]. The
    integrand is accumulated over the full tensor grid without exploiting
    separability, so this is an independent oracle for the closed form. The
    imaginary part must vanish by Hermitian symmetry of the integrand; its
    max-entry magnitude is returned, and only the real part is kept.
    """
    if n_r < 16 or n_theta < 16:
        raise ValueError("quadrature grid must have n_r, n_theta >= 16")
    W, beta = params.W, params.beta
    xg, wg = np.polynomial.legendre.leggauss(n_r)
    r = 0.5 * (xg + 1.0)
    wr = 0.5 * wg
    theta, wt = simpson_weights(n_theta, -beta, beta)
    z = (r[:, None] * np.exp(1j * theta[None, :])).ravel()
    # area measure r dr dtheta
    wq = (wr[:, None] * r[:, None] * wt[None, :]).ravel()
    P = z[:, None] ** np.arange(W)[None, :]
    M = P.T @ (wq[:, None] * P.conj())
    imag = float(np.abs(M.imag).max())
    if imag > 1e-10:
        raise FloatingPointError(f"imaginary quadrature residual {imag:.3e}")
    return QuadratureResult(matrix=M.real, imag_residual=imag, coarse_grid=n_theta < 8 * W)


# ---------------------------------------------------------------------------
# Spectrum report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumReport:
    """Clamped descending eigenvalues of Z, 1-indexed, annotated with k*."""

    params: SectorParams
    k_star: int
    indices: np.ndarray
    eigenvalues: np.ndarray

    @property
    def entries(self):
        return list(zip(self.indices.tolist(), self.eigenvalues.tolist()))


def spectrum_report(params: SectorParams) -> SpectrumReport:
    im = info_matrix(params)
    vals = im.clamped_eigenvalues()
    return SpectrumReport(
        params=params,
        k_star=im.k_star,
        indices=np.arange(1, params.W + 1),
        eigenvalues=vals,
    )
