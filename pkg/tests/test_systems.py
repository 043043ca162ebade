import json

import numpy as np
import pytest

from sector_spectral.experiments import _lower_bound_trial
from sector_spectral.numerics import rng_stream
from sector_spectral.systems import (QuantumSystem, SectorLDS, ShiftRegister,
                                     bohr_beta, generate_trajectory,
                                     impulse_response,
                                     linear_response_trajectory, liouvillian,
                                     lti_convolution_response,
                                     observations_from_controls,
                                     random_quantum_system, random_sector_lds,
                                     shift_register, shift_register_stream,
                                     write_trajectory_csv)


class TestRandomSectorLds:
    def test_degenerate_sector(self):
        sys = random_sector_lds(1, beta=1e-12, r_min=0.9, r_max=0.9, seed=1)
        assert abs(sys.eigenvalues[0] - 0.9) <= 1e-9

    def test_sector_membership(self):
        sys = random_sector_lds(10_000, beta=0.5 * np.pi, seed=2)
        z = sys.eigenvalues
        assert np.all(np.abs(np.angle(z)) <= 0.5 * np.pi)
        assert np.all((np.abs(z) >= 0.85 - 1e-12) & (np.abs(z) <= 0.95 + 1e-12))

    def test_area_uniform_radii(self):
        sys = random_sector_lds(10_000, beta=0.5 * np.pi, seed=3)
        mid = 0.5 * (0.85**2 + 0.95**2)
        frac = np.mean(np.abs(sys.eigenvalues) ** 2 <= mid)
        assert abs(frac - 0.5) <= 0.02

    def test_determinism(self):
        a = random_sector_lds(5, 0.3 * np.pi, seed=4)
        b = random_sector_lds(5, 0.3 * np.pi, seed=4)
        assert np.array_equal(a.eigenvalues, b.eigenvalues)
        assert np.array_equal(a.input_vec, b.input_vec)

    def test_unit_impulse_energy(self):
        sys = random_sector_lds(20, 0.5 * np.pi, seed=5, W=60)
        assert abs(np.linalg.norm(impulse_response(sys)) - 1.0) <= 1e-12

    def test_mode_coeffs_consistent(self):
        sys = random_sector_lds(6, 0.2 * np.pi, seed=6)
        assert np.abs(sys.mode_coeffs - sys.output_vec * sys.input_vec).max() <= 1e-12

    def test_bad_radii(self):
        with pytest.raises(ValueError):
            random_sector_lds(3, 1.0, r_min=0.9, r_max=0.8)


class TestTrajectory:
    def test_impulse_response_single_mode(self):
        z = 0.9 * np.exp(0.4j)
        sys = SectorLDS(eigenvalues=np.array([z]), input_vec=np.array([1.0 + 0j]),
                        output_vec=np.array([1.0 + 0j]), W=12)
        u = np.zeros(30, dtype=complex)
        u[0] = 1.0
        y = observations_from_controls(sys, u)
        for tau in range(1, 13):
            assert abs(y[tau] - z ** (tau - 1)) <= 1e-12
        assert np.abs(y[13:]).max() <= 1e-15

    def test_first_observation_is_zero(self):
        sys = random_sector_lds(4, 0.4 * np.pi, seed=7, W=10)
        traj = generate_trajectory(sys, 50, seed=8)
        assert traj.observations[0] == 0.0

    def test_finite_memory_probe(self):
        for seed in range(10):
            sys = random_sector_lds(5, 0.5 * np.pi, seed=seed, W=12)
            rng = rng_stream(60, seed)
            u = rng.standard_normal(40) + 1j * rng.standard_normal(40)
            y = observations_from_controls(sys, u)
            t = 30  # 1-based probe time
            beyond = u.copy()
            beyond[t - 12 - 1 - 1] += 1.0       # u_{t-W-1}
            inside = u.copy()
            inside[t - 12 - 1] += 1.0           # u_{t-W}
            assert observations_from_controls(sys, beyond)[t - 1] == y[t - 1]
            assert abs(observations_from_controls(sys, inside)[t - 1] - y[t - 1]) > 1e-12

    def test_csv_and_sidecar(self, tmp_path):
        sys = random_sector_lds(3, 0.3 * np.pi, seed=9, W=6)
        traj = generate_trajectory(sys, 8, seed=10, T_train=6)
        path = tmp_path / "traj.csv"
        write_trajectory_csv(traj, path, sidecar_params={"d": 3, "W": 6, "beta": 0.3 * np.pi})
        lines = path.read_text().strip().splitlines()
        assert lines[0] == "t,u_re,u_im,y_re,y_im"
        assert len(lines) == 9
        side = json.loads((tmp_path / "traj.csv.json").read_text())
        assert side["seed"] == 10 and side["T_train"] == 6


class TestLiouvillian:
    def test_zero_hamiltonian_gives_identity(self):
        n = 3
        sys = QuantumSystem(H0=np.zeros((n, n)), Hc=np.eye(n), O=np.eye(n),
                            rho_ss=np.eye(n) / n, dt=1.0)
        A, _, _ = liouvillian(sys)
        assert np.abs(A - np.eye(n * n)).max() <= 1e-12

    def test_diagonal_two_level_eigenphases(self):
        sys = QuantumSystem(H0=np.diag([0.5, -0.5]), Hc=np.array([[0, 1], [1, 0]], dtype=float),
                            O=np.diag([1.0, 0.0]), rho_ss=np.diag([0.6, 0.4]), dt=1.0)
        A, _, _ = liouvillian(sys)
        got = np.sort_complex(np.linalg.eigvals(A))
        expected = np.sort_complex(np.array([1.0, 1.0, np.exp(1j), np.exp(-1j)]))
        assert np.abs(got - expected).max() <= 1e-10

    def test_unitary(self):
        sys = random_quantum_system(3, dt=0.4, seed=11)
        A, _, _ = liouvillian(sys)
        assert np.abs(A.conj().T @ A - np.eye(9)).max() <= 1e-10

    def test_eigenvalue_multiset_random(self):
        for n in (2, 4, 6):
            sys = random_quantum_system(n, dt=0.2, seed=n)
            A, _, _ = liouvillian(sys)
            E = np.linalg.eigvalsh(sys.H0)
            expected = np.exp(1j * 0.2 * (E[None, :] - E[:, None])).ravel()
            got = sorted(np.linalg.eigvals(A), key=lambda z: (round(z.real, 9), round(z.imag, 9)))
            exp = sorted(expected, key=lambda z: (round(z.real, 9), round(z.imag, 9)))
            assert np.abs(np.array(got) - np.array(exp)).max() <= 1e-10

    def test_non_hermitian_rejected(self):
        H = np.zeros((2, 2))
        bad = np.array([[0.0, 1.0], [0.0, 0.0]])
        with pytest.raises(ValueError):
            QuantumSystem(H0=bad, Hc=H, O=H, rho_ss=np.eye(2) / 2, dt=1.0)

    def test_lti_matches_density_matrix_evolution(self):
        sys = random_quantum_system(2, dt=0.3, seed=12)
        A, B, C = liouvillian(sys)
        rng = rng_stream(61)
        u = rng.standard_normal(200)
        y_lti = lti_convolution_response(A, B, C, u, W=200)
        y_direct = linear_response_trajectory(sys, u)
        assert np.abs(y_lti - y_direct).max() <= 1e-8


class TestBohrBeta:
    def test_zero(self):
        sys = QuantumSystem(H0=np.zeros((2, 2)), Hc=np.eye(2), O=np.eye(2),
                            rho_ss=np.eye(2) / 2, dt=0.7)
        assert bohr_beta(sys) == 0.0

    def test_two_level(self):
        sys = QuantumSystem(H0=np.diag([0.5, -0.5]), Hc=np.eye(2), O=np.eye(2),
                            rho_ss=np.eye(2) / 2, dt=0.3)
        assert abs(bohr_beta(sys) - 0.3) <= 1e-15

    def test_linear_in_dt(self):
        a = random_quantum_system(3, dt=0.2, seed=13)
        b = QuantumSystem(H0=a.H0, Hc=a.Hc, O=a.O, rho_ss=a.rho_ss, dt=0.4)
        assert abs(bohr_beta(b) - 2 * bohr_beta(a)) <= 1e-12


class TestShiftRegister:
    def test_known_pattern(self):
        sr = ShiftRegister(d=3, h0=np.array([1, -1, 1]))
        assert np.array_equal(sr.observations(6), [1, -1, 1, 1, -1, 1])

    def test_values_pm_one(self):
        obs = shift_register_stream(16, seed=14, n=40)
        assert set(np.unique(obs)) <= {-1.0, 1.0}

    def test_cyclic(self):
        sr = shift_register(7, seed=15)
        obs = sr.observations(21)
        assert np.array_equal(obs[:7], obs[7:14])
        assert np.array_equal(obs[:7], obs[14:])

    def test_determinism(self):
        assert np.array_equal(shift_register_stream(9, seed=16),
                              shift_register_stream(9, seed=16))

    def test_invalid_h0(self):
        with pytest.raises(ValueError):
            ShiftRegister(d=2, h0=np.array([1.0, 0.5]))


class TestLowerBoundEmpirics:
    def test_small_instance(self):
        d, trials = 16, 100
        losses = [_lower_bound_trial(seed, d, lam=1e-5) for seed in range(trials)]
        assert np.mean(losses) >= 0.9 * d

    def test_causality(self):
        # losses before step t are unchanged by permuting later h0 components
        d = 12
        sr = shift_register(d, seed=17)
        h0 = sr.h0.copy()
        t_cut = 6
        permuted = h0.copy()
        permuted[t_cut:] = permuted[t_cut:][::-1]

        def losses_for(h):
            from sector_spectral.filters import window_matrix
            from sector_spectral.learners import vaw_init, vaw_step
            obs = ShiftRegister(d=d, h0=h).observations(d)
            win = window_matrix(obs, d)
            feats = np.vstack([np.zeros((1, d), dtype=complex), win[:d - 1]])
            state = vaw_init(d, lam=1e-5, incremental=False)
            out = []
            for t in range(d):
                pred, state = vaw_step(state, feats[t], obs[t])
                out.append(abs(pred - obs[t]) ** 2)
            return np.array(out)

        base = losses_for(h0)
        perm = losses_for(permuted)
        assert np.array_equal(base[:t_cut], perm[:t_cut])
