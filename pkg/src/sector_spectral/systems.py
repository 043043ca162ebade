"""Data generators: sector-constrained linear systems, driven quantum dynamics
in the linear-response regime, and the shift-register hard instance.

Sector systems are kept in the diagonal frame (eigenvalues plus input/output
vectors absorbed through the diagonalizing change of basis), so generating a
trajectory costs O(d*W + T*W) regardless of the hidden dimension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .numerics import complex_gaussian, rng_stream


# ---------------------------------------------------------------------------
# Sector-constrained diagonal systems
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SectorLDS:
    """Diagonal-frame complex LTI system with finite memory W.

    ``eigenvalues`` are the transition spectrum, ``input_vec``/``output_vec``
    the diagonal-frame input/output maps. The response is a length-W
    convolution with impulse response g[tau] = sum_j c_j z_j^tau where
    c_j = output_vec[j] * input_vec[j].
    """

    eigenvalues: np.ndarray
    input_vec: np.ndarray
    output_vec: np.ndarray
    W: int

    @property
    def d(self) -> int:
        return len(self.eigenvalues)

    @property
    def mode_coeffs(self) -> np.ndarray:
        return self.output_vec * self.input_vec


def impulse_response(sys: SectorLDS) -> np.ndarray:
    """g[tau] = sum_j c_j z_j^tau for tau = 0..W-1 (the response at lag tau+1)."""
    tau = np.arange(sys.W)
    return (sys.mode_coeffs[None, :] * sys.eigenvalues[None, :] ** tau[:, None]).sum(axis=1)


def random_sector_lds(d, beta, r_min=0.85, r_max=0.95, seed=0, W=100) -> SectorLDS:
    """Random system with spectrum uniform (area measure) on the annulus-sector.

    Radii use the inverse-CDF of the area measure, angles are uniform on
    [-beta, beta]. Input/output vectors are i.i.d. complex Gaussian, then both
    are rescaled so the truncated impulse response has unit energy
    (||g||_2 = 1), i.e. unit output variance under white unit-variance
    controls. The scale of the mode coefficients is therefore pinned by an
    observable quantity that does not drift with the hidden dimension.
    """
    if not 0.0 <= r_min <= r_max <= 1.0:
        raise ValueError(f"need 0 <= r_min <= r_max <= 1, got [{r_min}, {r_max}]")
    if not 0.0 < beta <= np.pi + 1e-12:
        raise ValueError(f"beta must be in (0, pi], got {beta}")
    if d < 1 or W < 1:
        raise ValueError("d and W must be >= 1")
    rng = rng_stream(seed, 17)
    u = rng.uniform(size=d)
    r = np.sqrt(r_min**2 + u * (r_max**2 - r_min**2))
    theta = rng.uniform(-beta, beta, size=d)
    z = r * np.exp(1j * theta)
    b_vec = complex_gaussian(d, rng)
    c_vec = complex_gaussian(d, rng)
    sys = SectorLDS(eigenvalues=z, input_vec=b_vec, output_vec=c_vec, W=W)
    energy = float(np.linalg.norm(impulse_response(sys)))
    if energy < 1e-12:
        raise FloatingPointError("degenerate system: impulse response ~ 0")
    s = 1.0 / np.sqrt(energy)
    return SectorLDS(eigenvalues=z, input_vec=b_vec * s, output_vec=c_vec * s, W=W)


@dataclass(frozen=True)
class Trajectory:
    """Paired control/observation sequences with the seed that produced them."""

    controls: np.ndarray
    observations: np.ndarray
    seed: int
    T_train: int | None = None

    @property
    def T(self) -> int:
        return len(self.controls)


def observations_from_controls(sys: SectorLDS, u) -> np.ndarray:
    """y_t = sum_{tau=1}^{min(W, t-1)} g[tau-1] * u_{t-tau}; controls before t=1 are zero."""
    u = np.asarray(u, dtype=complex)
    g = impulse_response(sys)
    conv = np.convolve(g, u)
    y = np.zeros(len(u), dtype=complex)
    y[1:] = conv[:len(u) - 1]
    return y


def generate_trajectory(sys: SectorLDS, T: int, seed: int, T_train: int | None = None) -> Trajectory:
    """Drive the system with standard complex Gaussian controls for T steps."""
    if T < 1:
        raise ValueError(f"T must be >= 1, got {T}")
    rng = rng_stream(seed, 23)
    u = complex_gaussian(T, rng)
    return Trajectory(controls=u, observations=observations_from_controls(sys, u),
                      seed=int(seed), T_train=T_train)


def write_trajectory_csv(traj: Trajectory, path, sidecar_params=None):
    """CSV ``t,u_re,u_im,y_re,y_im`` plus a JSON sidecar of generation parameters."""
    with open(path, "w") as fh:
        fh.write("t,u_re,u_im,y_re,y_im\n")
        for t in range(traj.T):
            u, y = traj.controls[t], traj.observations[t]
            fh.write(f"{t + 1},{u.real:.17g},{u.imag:.17g},{y.real:.17g},{y.imag:.17g}\n")
    if sidecar_params is not None:
        side = dict(sidecar_params)
        side.setdefault("seed", traj.seed)
        side.setdefault("T", traj.T)
        if traj.T_train is not None:
            side.setdefault("T_train", traj.T_train)
        with open(str(path) + ".json", "w") as fh:
            json.dump(side, fh, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Driven quantum dynamics (linear response)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuantumSystem:
    """Drift/control Hamiltonians, observable, reference state, sampling step."""

    H0: np.ndarray
    Hc: np.ndarray
    O: np.ndarray
    rho_ss: np.ndarray
    dt: float

    def __post_init__(self):
        for name in ("H0", "Hc", "O"):
            M = getattr(self, name)
            if np.abs(M - M.conj().T).max() > 1e-12:
                raise ValueError(f"{name} must be Hermitian")
        tr = complex(np.trace(self.rho_ss))
        if abs(tr - 1.0) > 1e-12:
            raise ValueError(f"rho_ss must have unit trace, got {tr}")
        evals = np.linalg.eigvalsh(0.5 * (self.rho_ss + self.rho_ss.conj().T))
        if evals.min() < -1e-12:
            raise ValueError("rho_ss must be positive semi-definite")

    @property
    def dim(self) -> int:
        return self.H0.shape[0]


def random_quantum_system(n: int, dt: float, seed: int, inverse_temp: float = 1.0) -> QuantumSystem:
    """Random Hermitian drift/control/observable with a thermal reference state.

    The thermal state commutes with H0, so the undriven dynamics hold it fixed.
    """
    rng = rng_stream(seed, 29)

    def herm(n):
        X = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        return 0.5 * (X + X.conj().T)

    H0, Hc, O = herm(n), herm(n), herm(n)
    E, V = np.linalg.eigh(H0)
    pops = np.exp(-inverse_temp * (E - E.min()))
    rho = V @ np.diag(pops / pops.sum()) @ V.conj().T
    return QuantumSystem(H0=H0, Hc=Hc, O=O, rho_ss=rho, dt=float(dt))


def _unitary(H, dt):
    E, V = np.linalg.eigh(H)
    return V @ np.diag(np.exp(-1j * E * dt)) @ V.conj().T


def vec(M):
    """Column-stacking vectorization, the convention under which
    |X Y Z>> = (Z^T kron X) |Y>>."""
    return np.asarray(M).flatten(order="F")


def liouvillian(sys: QuantumSystem):
    """Vectorized linear-response triple (A, B, C) of the driven dynamics.

    A = exp(i H0^T dt) kron exp(-i H0 dt) propagates the vectorized state one
    step; B is the vectorized commutator response -i*dt*[Hc, rho_ss] (the
    small-dt linearization of the control coupling); C reads out Tr(O rho) as
    the row vector vec(O^H)^H.
    """
    U = _unitary(sys.H0, sys.dt)
    A = np.kron(U.conj().T.T, U)        # exp(i H0^T dt) kron exp(-i H0 dt)
    D = -1j * sys.dt * (sys.Hc @ sys.rho_ss - sys.rho_ss @ sys.Hc)
    B = vec(D)
    C = vec(sys.O.conj().T).conj()
    return A, B, C


def bohr_beta(sys: QuantumSystem) -> float:
    """Largest energy gap of H0 times dt: the minimal admissible sector angle."""
    E = np.linalg.eigvalsh(sys.H0)
    return float((E.max() - E.min()) * sys.dt)


def lti_convolution_response(A, B, C, u, W: int) -> np.ndarray:
    """Generic finite-memory LTI response y_t = sum_{tau<=W} C A^{tau-1} B u_{t-tau}."""
    u = np.asarray(u, dtype=complex)
    markov = np.zeros(W, dtype=complex)
    v = np.asarray(B, dtype=complex).copy()
    for tau in range(W):
        markov[tau] = np.asarray(C) @ v
        v = A @ v
    conv = np.convolve(markov, u)
    y = np.zeros(len(u), dtype=complex)
    y[1:] = conv[:len(u) - 1]
    return y


def linear_response_trajectory(sys: QuantumSystem, u) -> np.ndarray:
    """Direct density-matrix simulation of the linearized driven update.

    Evolves rho_{t+1} = U rho_t U^H + u_t * (-i dt [Hc, rho_ss]) from
    rho_1 = rho_ss and returns Tr(O rho_t) minus the control-free baseline,
    which isolates the driven (linear-response) part of the signal even when
    rho_ss is not an exact fixed point.
    """
    u = np.asarray(u, dtype=complex)
    U = _unitary(sys.H0, sys.dt)
    Ud = U.conj().T
    D = -1j * sys.dt * (sys.Hc @ sys.rho_ss - sys.rho_ss @ sys.Hc)
    rho = sys.rho_ss.astype(complex)
    rho_free = sys.rho_ss.astype(complex)
    y = np.zeros(len(u), dtype=complex)
    for t in range(len(u)):
        y[t] = np.trace(sys.O @ rho) - np.trace(sys.O @ rho_free)
        rho = U @ rho @ Ud + u[t] * D
        rho_free = U @ rho_free @ Ud
    return y


# ---------------------------------------------------------------------------
# Shift-register hard instance
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShiftRegister:
    """Autonomous cyclic-shift system revealing one +-1 coordinate per step."""

    d: int
    h0: np.ndarray

    def __post_init__(self):
        if self.d < 1 or self.h0.shape != (self.d,):
            raise ValueError("h0 must have shape (d,)")
        if not np.all(np.abs(self.h0) == 1):
            raise ValueError("h0 entries must be +-1")

    def observations(self, n: int) -> np.ndarray:
        """y_0..y_{n-1}; the first d observations are h0 in order, then cyclic."""
        idx = np.arange(n) % self.d
        return self.h0[idx].astype(float)


def shift_register(d: int, seed: int) -> ShiftRegister:
    """Uniformly random initial state in {-1, +1}^d."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    rng = rng_stream(seed, 31)
    h0 = rng.integers(0, 2, size=d) * 2 - 1
    return ShiftRegister(d=d, h0=h0)


def shift_register_stream(d: int, seed: int, n: int | None = None) -> np.ndarray:
    """Observation sequence of a random shift register (length n, default d)."""
    sr = shift_register(d, seed)
    return sr.observations(d if n is None else n)
