"""Spectral filtering for complex linear dynamical systems with sector-bounded
spectra: information-matrix filter banks, online forward regression, quantum
linear-response generators, and reproducible experiment drivers."""

__version__ = "0.1.0"

from .filters import (FilterBank, fourier_bank, load_bank, make_window,
                      project, project_all, save_bank, slepian_bank,
                      window_matrix)
from .infomatrix import (InfoMatrix, SectorParams, SpectrumReport,
                         effective_dimension, hankel_factor, info_matrix,
                         info_matrix_quadrature, slepian_toeplitz_factor,
                         spectrum_report)
from .learners import (LossLedger, VawState, raw_window_baseline, regret,
                       ridge_fit, ridge_predict, run_filtered_online,
                       vaw_init, vaw_step)
from .numerics import (EigenDecomposition, complex_gaussian, jacobi_sym_eig,
                       regularized_solve, rng_stream, sym_eig)
from .systems import (QuantumSystem, SectorLDS, ShiftRegister, Trajectory,
                      bohr_beta, generate_trajectory, impulse_response,
                      linear_response_trajectory, liouvillian,
                      lti_convolution_response, observations_from_controls,
                      random_quantum_system, random_sector_lds,
                      shift_register, shift_register_stream,
                      write_trajectory_csv)

__all__ = [name for name in dir() if not name.startswith("_")]
