"""Filter banks and control-history projections.

A bank is a W x k column-orthonormal set. The Slepian bank holds the top-k
eigenvectors of the sector information matrix (real-valued, optimally
concentrated on the sector); the Fourier bank holds the k lowest-|frequency|
DFT modes and serves as the ablation baseline.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .infomatrix import SectorParams, info_matrix


@dataclass(frozen=True)
class FilterBank:
    """Column-orthonormal projection basis with provenance metadata."""

    W: int
    k: int
    vectors: np.ndarray            # W x k, complex container; Slepian columns are real
    kind: str                      # "slepian" | "fourier"
    beta: float | None = None      # set for Slepian banks

    def gram_residual(self):
        G = self.vectors.conj().T @ self.vectors
        return float(np.abs(G - np.eye(self.k)).max())


def _fix_signs(vecs, tol=1e-12):
    """Rotate each column so its first entry of magnitude > tol is positive real."""
    out = vecs.copy()
    for c in range(out.shape[1]):
        col = out[:, c]
        big = np.abs(col) > tol
        if not big.any():
            continue
        lead = col[np.argmax(big)]
        out[:, c] = col * (np.conj(lead) / abs(lead))
    return out


def slepian_bank(params: SectorParams, k: int) -> FilterBank:
    """Top-k eigenvectors of the information matrix, descending eigenvalue order.

    Eigenvector phase is free, so the sign convention (first significant
    component positive) is enforced to make banks bit-reproducible.
    """
    if not 1 <= k <= params.W:
        raise ValueError(f"bank size k={k} must satisfy 1 <= k <= W={params.W}")
    vecs = info_matrix(params).eig.eigenvectors[:, :k]
    vecs = _fix_signs(vecs.astype(complex))
    return FilterBank(W=params.W, k=k, vectors=vecs, kind="slepian", beta=params.beta)


def fourier_frequencies(k: int):
    """Frequency ordering 0, +1, -1, +2, -2, ... (increasing |f|, positive first)."""
    freqs = [0]
    m = 1
    while len(freqs) < k:
        freqs.append(m)
        if len(freqs) < k:
            freqs.append(-m)
        m += 1
    return freqs


def fourier_bank(W: int, k: int) -> FilterBank:
    """The k lowest-|frequency| columns of the unitary DFT matrix."""
    if not 1 <= k <= W:
        raise ValueError(f"bank size k={k} must satisfy 1 <= k <= W={W}")
    n = np.arange(W)
    freqs = np.array(fourier_frequencies(k))
    F = np.exp(2j * np.pi * np.outer(n, freqs) / W) / np.sqrt(W)
    return FilterBank(W=W, k=k, vectors=F, kind="fourier")


# ---------------------------------------------------------------------------
# History windows
# ---------------------------------------------------------------------------

def make_window(history, t: int, W: int):
    """Window [u_t, u_{t-1}, ..., u_{t-W+1}] with zeros before the first step.

    ``history`` holds u_1 .. u_n (0-based array); entry i of the result is
    u_{t-i}, or 0 when t-i < 1.
    """
    history = np.asarray(history)
    if t < 1:
        raise ValueError(f"time index must be >= 1, got {t}")
    if t > len(history):
        raise ValueError(f"t={t} exceeds available history of length {len(history)}")
    out = np.zeros(W, dtype=complex)
    take = min(W, t)
    out[:take] = history[t - take:t][::-1]
    return out


def window_matrix(u, W: int):
    """All windows of a control sequence, one row per time step.

    Row t-1 (0-based) is the window at time t, most-recent-first, zero-padded
    for t < W. Equivalent to stacking ``make_window(u, t, W)`` for t = 1..T.
    """
    u = np.asarray(u, dtype=complex)
    padded = np.concatenate([np.zeros(W - 1, dtype=complex), u]) if W > 1 else u
    view = np.lib.stride_tricks.sliding_window_view(padded, W)
    return view[:, ::-1].copy()


def project(bank: FilterBank, window):
    """Compressed state: conjugate-transpose action of the bank on the window."""
    window = np.asarray(window, dtype=complex)
    if window.shape != (bank.W,):
        raise ValueError(f"window length {window.shape} does not match bank W={bank.W}")
    return bank.vectors.conj().T @ window


def project_all(bank: FilterBank, windows):
    """Row-wise projection of a window matrix; row t is project(bank, window_t)."""
    windows = np.asarray(windows, dtype=complex)
    if windows.shape[1] != bank.W:
        raise ValueError(f"window width {windows.shape[1]} does not match bank W={bank.W}")
    return windows @ bank.vectors.conj()


# ---------------------------------------------------------------------------
# Bank serialization (experiment caching)
# ---------------------------------------------------------------------------

def save_bank(bank: FilterBank, path):
    """CSV dump: one header line ``W,k,kind,beta`` then column-major re,im rows."""
    with open(path, "w") as fh:
        beta = "" if bank.beta is None else f"{bank.beta:.17g}"
        fh.write(f"{bank.W},{bank.k},{bank.kind},{beta}\n")
        flat = bank.vectors.flatten(order="F")
        for v in flat:
            fh.write(f"{v.real:.17g},{v.imag:.17g}\n")


def load_bank(path) -> FilterBank:
    with open(path) as fh:
        W_s, k_s, kind, beta_s = fh.readline().strip().split(",")
        W, k = int(W_s), int(k_s)
        beta = float(beta_s) if beta_s else None
        data = np.loadtxt(fh, delimiter=",").reshape(-1, 2)
    vecs = (data[:, 0] + 1j * data[:, 1]).reshape((W, k), order="F")
    return FilterBank(W=W, k=k, vectors=vecs, kind=kind, beta=beta)
