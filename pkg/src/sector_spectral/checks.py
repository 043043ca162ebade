"""Numerical verification suite for the spectral claims behind the method.

Each check returns a measured margin together with the threshold it is held
to, so the CLI can emit a machine-readable pass/fail report. Thresholds were
pinned from oracle runs at the stated sizes (see the test suite for the
pinning commands).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filters import slepian_bank
from .infomatrix import (SectorParams, effective_dimension, hankel_factor,
                         info_matrix, info_matrix_quadrature,
                         slepian_toeplitz_factor)
from .numerics import jacobi_sym_eig, rng_stream


@dataclass(frozen=True)
class CheckResult:
    check: str
    context: str
    measured: float
    threshold: float
    comparison: str          # "<=" or ">="

    @property
    def passed(self) -> bool:
        if self.comparison == "<=":
            return self.measured <= self.threshold
        return self.measured >= self.threshold


def _le(check, context, measured, threshold):
    return CheckResult(check, context, float(measured), float(threshold), "<=")


def _ge(check, context, measured, threshold):
    return CheckResult(check, context, float(measured), float(threshold), ">=")


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def hadamard_identity(Ws=(10, 100), beta_mults=(0.2, 0.5, 0.9)):
    """Closed-form Z agrees entrywise with the Hankel * Toeplitz product."""
    out = []
    for W in Ws:
        for bm in beta_mults:
            im = info_matrix(SectorParams(W, bm * np.pi))
            err = np.abs(im.Z - im.hankel * im.toeplitz).max()
            out.append(_le("hadamard_identity", f"W={W},beta={bm}pi", err, 1e-14))
    return out


def quadrature_consistency(W=6, beta=0.7, n_r=512, n_theta=512, tol=1e-6):
    """Closed form vs the 2-D tensor quadrature of the defining integral."""
    params = SectorParams(W, beta)
    quad = info_matrix_quadrature(params, n_r, n_theta)
    err = np.abs(info_matrix(params).Z - quad.matrix).max()
    ctx = f"W={W},beta={beta},grid={n_r}x{n_theta}"
    return [
        _le("quadrature_consistency", ctx, err, tol),
        _le("quadrature_imag_residual", ctx, quad.imag_residual, 1e-10),
    ]


def psd_floor(Ws=(100, 200, 400), beta_mults=(0.2, 0.5, 0.9)):
    """Raw eigenvalues never dip below -1e-10 * sigma_1."""
    out = []
    for W in Ws:
        for bm in beta_mults:
            eig = info_matrix(SectorParams(W, bm * np.pi)).eig
            floor = eig.eigenvalues.min() / eig.eigenvalues[0]
            out.append(_ge("psd_floor", f"W={W},beta={bm}pi", floor, -1e-10))
    return out


def spectrum_cutoff(Ws=(100, 200, 400), beta_mults=(0.2, 0.5, 0.9)):
    """Spectral collapse past the Shannon number k*.

    Asserts sigma_{ceil(1.5 k*)} / sigma_1 <= 1e-4 and a negative
    least-squares slope of log sigma_k against k/k* on k in [k*, min(3k*, W)].
    Values at the double-precision noise floor are clamped to eps * sigma_1
    before taking logs.
    """
    out = []
    for W in Ws:
        for bm in beta_mults:
            params = SectorParams(W, bm * np.pi)
            eig = info_matrix(params).eig
            vals = eig.clamped()
            s1 = vals[0]
            kstar = effective_dimension(params)
            ctx = f"W={W},beta={bm}pi"
            k15 = min(int(np.ceil(1.5 * kstar)), W)
            out.append(_le("cutoff_ratio", ctx, vals[k15 - 1] / s1, 1e-4))
            ks = np.arange(kstar, min(3 * kstar, W) + 1)
            logs = np.log(np.maximum(vals[ks - 1], np.finfo(float).eps * s1))
            slope = np.polyfit(ks / kstar, logs, 1)[0]
            out.append(_le("cutoff_slope", ctx, slope, 0.0))
    return out


def hankel_decay(Ws=(100, 400)):
    """Eigenvalues of the radial factor collapse after ~3 log W indices."""
    out = []
    for W in Ws:
        vals = np.linalg.eigvalsh(hankel_factor(W))[::-1]
        j = int(np.ceil(3 * np.log(W)))
        out.append(_le("hankel_decay", f"W={W},j={j}", vals[j - 1] / vals[0], 1e-3))
    return out


# Passband/stopband margins for W=100 pinned from an oracle run
# (observed 1.65e-9 and 1.73e-8; kept with ~5x headroom).
_DPSS_MARGINS = {400: (1e-6, 1e-6), 100: (1e-8, 1e-7)}


def dpss_concentration(Ws=(100, 400), beta_mult=0.5):
    """Eigenvalues of the angular factor / 2pi pin to {1, 0} away from k*.

    Checks the band edges at 0.8 k* (passband, value >= 1 - margin) and
    1.2 k* (stopband, value <= margin).
    """
    out = []
    for W in Ws:
        beta = beta_mult * np.pi
        vals = np.linalg.eigvalsh(slepian_toeplitz_factor(W, beta))[::-1] / (2 * np.pi)
        kstar = effective_dimension(SectorParams(W, beta))
        lo = int(np.ceil(0.8 * kstar))
        hi = int(np.ceil(1.2 * kstar))
        pass_m, stop_m = _DPSS_MARGINS.get(W, (1e-6, 1e-6))
        ctx = f"W={W},beta={beta_mult}pi"
        out.append(_le("dpss_passband", ctx + f",k<={lo}", 1.0 - vals[:lo].min(), pass_m))
        out.append(_le("dpss_stopband", ctx + f",k>={hi}", vals[hi - 1:].max(), stop_m))
    return out


def projection_decay(W=100, beta_mult=0.5, indices=(55, 65, 75), grid=200):
    """Grid maximum of |phi_i^H mu(z)|^2 against (24*144*beta^7*W^4*sigma_i)^{1/3}.

    The eigensolve runs in extended precision (cyclic Jacobi), which resolves
    the tail eigenvalues about three decades below the double-precision noise
    floor; grid evaluation of the projections is done in double.
    """
    beta = beta_mult * np.pi
    betal = np.longdouble(beta_mult) * np.longdouble(np.pi)
    j = np.arange(W, dtype=np.longdouble)
    d = j[:, None] - j[None, :]
    sinc = np.ones((W, W), dtype=np.longdouble)
    nz = d != 0
    sinc[nz] = np.sin(d[nz] * betal) / (d[nz] * betal)
    Z = 2 * betal / (j[:, None] + j[None, :] + 2) * sinc
    eig = jacobi_sym_eig(Z)
    r = np.linspace(0.0, 1.0, grid)
    th = np.linspace(-beta, beta, grid)
    z = (r[:, None] * np.exp(1j * th[None, :])).ravel()
    P = z[:, None] ** np.arange(W)[None, :]
    const = 24.0 * 144.0 * beta**7 * W**4
    out = []
    for i in indices:
        sigma = max(float(eig.eigenvalues[i - 1]), 0.0)
        phi = eig.eigenvectors[:, i - 1].astype(float)
        lhs = float((np.abs(P @ phi.astype(complex)) ** 2).max())
        rhs = (const * sigma) ** (1.0 / 3.0)
        out.append(_le("projection_decay", f"W={W},beta={beta_mult}pi,i={i}", lhs, rhs))
    return out


def subspace_reconstruction(W=100, beta_mults=(0.2, 0.5), n_points=50, seed=7,
                            r_min=0.85, r_max=0.95):
    """Relative residual of annulus-sector trajectories in the 2k*-dim bank.

    Threshold 1e-6 pinned by oracle run (observed max ~1e-7 at beta=0.2pi;
    the beta=0.5pi case has 2k* = W, where the residual is exactly zero).
    """
    out = []
    for bm in beta_mults:
        beta = bm * np.pi
        params = SectorParams(W, beta)
        k = min(2 * effective_dimension(params), W)
        bank = slepian_bank(params, k)
        rng = rng_stream(seed, 37)
        r = np.sqrt(rng.uniform(r_min**2, r_max**2, n_points))
        th = rng.uniform(-beta, beta, n_points)
        z = r * np.exp(1j * th)
        M = z[:, None] ** np.arange(W)[None, :]
        proj = (M @ bank.vectors.conj()) @ bank.vectors.T
        rel = (np.abs(M - proj) ** 2).sum(axis=1) / (np.abs(M) ** 2).sum(axis=1)
        out.append(_le("subspace_reconstruction", f"W={W},beta={bm}pi,k={k}",
                       rel.max(), 1e-6))
    return out


# ---------------------------------------------------------------------------
# Full suite
# ---------------------------------------------------------------------------

def run_all(fast=False):
    """The full verification suite; ``fast`` shrinks sizes for smoke testing."""
    if fast:
        results = (
            hadamard_identity(Ws=(10, 40))
            + quadrature_consistency(W=4, n_r=64, n_theta=64)
            + psd_floor(Ws=(60,))
            + spectrum_cutoff(Ws=(60,))
            + hankel_decay(Ws=(60,))
            + dpss_concentration(Ws=(100,))
            + projection_decay(W=60, indices=(35, 40), grid=80)
            + subspace_reconstruction(W=60, beta_mults=(0.2,))
        )
    else:
        results = (
            hadamard_identity()
            + quadrature_consistency()
            + psd_floor()
            + spectrum_cutoff()
            + hankel_decay()
            + dpss_concentration()
            + projection_decay()
            + subspace_reconstruction()
        )
    return results
