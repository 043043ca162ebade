"""Online and batch predictors in filtered feature space.

The online learner is the forward (Vovk-Azoury-Warmuth) ridge forecaster: the
covariance it inverts already includes the current feature vector, while the
cross-moment only contains past targets. Predictions are linear functionals of
the features, y_hat = w^H h with w = (lam I + sum_s h_s h_s^H)^{-1} sum_s
conj(y_s) h_s. On real data this is the textbook forward update; for complex
data the conjugation on y_s is forced: accumulating unconjugated targets would
make the predictor conjugate-linear in h, and circularly symmetric inputs have
zero pseudo-covariance, so a linear-response target would be unlearnable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filters import FilterBank, project_all, window_matrix
from .numerics import cholesky_solve, cholesky_update, regularized_solve


# ---------------------------------------------------------------------------
# Forward ridge (VAW) forecaster
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VawState:
    """Accumulators of the forward ridge forecaster after t observed steps.

    ``cov`` is sum_s h_s h_s^H (so V = lam*I + cov), ``b`` is
    sum_s conj(y_s) h_s. ``chol`` caches the Cholesky factor of V and is the
    O(k^2)-per-step incremental path; when absent every prediction re-solves
    from scratch, which is the testing oracle.
    """

    lam: float
    cov: np.ndarray
    b: np.ndarray
    t: int
    chol: np.ndarray | None = None

    @property
    def k(self) -> int:
        return self.cov.shape[0]

    @property
    def V(self) -> np.ndarray:
        return self.cov + self.lam * np.eye(self.k)


def vaw_init(k: int, lam: float = 1e-5, incremental: bool = True) -> VawState:
    if k < 1:
        raise ValueError(f"feature dimension must be >= 1, got {k}")
    if lam <= 0:
        raise ValueError(f"lam must be positive, got {lam}")
    chol = np.sqrt(lam) * np.eye(k, dtype=complex) if incremental else None
    return VawState(lam=lam, cov=np.zeros((k, k), dtype=complex),
                    b=np.zeros(k, dtype=complex), t=0, chol=chol)


def vaw_step(state: VawState, h, y):
    """Predict the next target with h folded into the covariance, then absorb y.

    Returns ``(prediction, new_state)``. The cross-moment excludes the current
    target, so the first prediction is exactly 0.
    """
    h = np.asarray(h, dtype=complex)
    if h.shape != (state.k,):
        raise ValueError(f"feature shape {h.shape} does not match k={state.k}")
    cov = state.cov + np.outer(h, h.conj())
    if state.chol is not None:
        chol = cholesky_update(state.chol, h)
        z = cholesky_solve(chol, h)
    else:
        chol = None
        z = regularized_solve(cov, state.lam, h)
    pred = complex(np.vdot(state.b, z))
    new = VawState(lam=state.lam, cov=cov, b=state.b + np.conj(y) * h,
                   t=state.t + 1, chol=chol)
    return pred, new


# ---------------------------------------------------------------------------
# Batch ridge regression
# ---------------------------------------------------------------------------

def ridge_fit(features, targets, lam):
    """argmin_w sum_s |w^H h_s - y_s|^2 + lam ||w||^2 via the normal equations.

    ``features`` has one sample per row. The normal-equation residual is
    verified to 1e-8 relative before returning.
    """
    H = np.asarray(features, dtype=complex)
    y = np.asarray(targets, dtype=complex)
    if H.ndim != 2 or H.shape[0] != y.shape[0] or H.shape[0] < 1:
        raise ValueError(f"inconsistent shapes: features {H.shape}, targets {y.shape}")
    if lam <= 0:
        raise ValueError(f"lam must be positive, got {lam}")
    k = H.shape[1]
    gram = H.T @ H.conj()            # sum_s h_s h_s^H
    rhs = H.T @ y.conj()             # sum_s conj(y_s) h_s
    A = gram + lam * np.eye(k)
    w = np.linalg.solve(A, rhs)
    resid = np.linalg.norm(A @ w - rhs)
    if resid > 1e-8 * max(np.linalg.norm(rhs), 1e-300):
        raise FloatingPointError(f"normal-equation residual {resid:.3e}")
    return w


def ridge_predict(w, features):
    """Predictions w^H h_s, one per feature row."""
    return np.asarray(features, dtype=complex) @ np.conj(w)


# ---------------------------------------------------------------------------
# Loss accounting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LossLedger:
    """Per-step squared errors |pred - y|^2 and their running sum."""

    step_losses: np.ndarray
    comparator_losses: np.ndarray | None = None

    def __post_init__(self):
        losses = np.asarray(self.step_losses, dtype=float)
        if losses.size and losses.min() < 0:
            raise ValueError("step losses must be nonnegative")
        object.__setattr__(self, "step_losses", losses)

    @property
    def cumulative(self) -> float:
        return float(np.sum(self.step_losses))

    @property
    def running(self) -> np.ndarray:
        return np.cumsum(self.step_losses)

    def write_csv(self, path):
        run = self.running
        with open(path, "w") as fh:
            fh.write("t,step_loss,cumulative_loss\n")
            for t, (sl, cl) in enumerate(zip(self.step_losses, run), start=1):
                fh.write(f"{t},{sl:.17g},{cl:.17g}\n")


def regret(ledger: LossLedger, comparator_loss: float) -> float:
    """Cumulative loss minus the comparator's cumulative loss."""
    if comparator_loss < 0:
        raise ValueError("comparator loss must be nonnegative")
    return ledger.cumulative - comparator_loss


# ---------------------------------------------------------------------------
# Online protocols
# ---------------------------------------------------------------------------

def run_filtered_online(u, y, bank: FilterBank | None, W: int | None = None,
                        lam: float = 1e-5, incremental: bool = True):
    """Online prediction of y_{t+1} from the (filtered) control history.

    At each t = 1..T-1: form the window of controls up to u_t, project it
    through ``bank`` (identity features of width W when bank is None), query
    the forecaster for y_{t+1}, then reveal y_{t+1}. Returns
    ``(predictions, LossLedger)`` over the targets y_2..y_T.
    """
    u = np.asarray(u, dtype=complex)
    y = np.asarray(y, dtype=complex)
    if u.shape != y.shape:
        raise ValueError("controls and observations must have equal length")
    if bank is not None:
        W = bank.W
    if W is None:
        raise ValueError("need a bank or an explicit window length")
    windows = window_matrix(u, W)
    feats = project_all(bank, windows) if bank is not None else windows
    state = vaw_init(feats.shape[1], lam=lam, incremental=incremental)
    preds = np.zeros(len(y) - 1, dtype=complex)
    for t in range(len(y) - 1):
        preds[t], state = vaw_step(state, feats[t], y[t + 1])
    return preds, LossLedger(np.abs(preds - y[1:]) ** 2)


def raw_window_baseline(u, y, W: int, lam: float = 1e-5) -> LossLedger:
    """Online regression on the raw W-wide window (identity features, k = W)."""
    if len(u) < W:
        raise ValueError(f"trajectory of length {len(u)} is shorter than W={W}")
    _, ledger = run_filtered_online(u, y, bank=None, W=W, lam=lam)
    return ledger
