import json

import numpy as np
import pytest

from sector_spectral import cli
from sector_spectral.experiments import (SCHEMAS, ExperimentConfig, _ci_half,
                                         _fmt, run_command, run_spectrum,
                                         run_tomography, validate_rows)


def small_cfg(command, **kw):
    defaults = dict(command=command, W=[20], beta=[0.4 * np.pi], K=[4, 8],
                    d=[4], T=120, T_train=90, trials=3, seed=7, fast=True)
    defaults.update(kw)
    return ExperimentConfig(**defaults)


class TestConfig:
    def test_split_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(command="tomography", T=100, T_train=100)

    def test_trials_validation(self):
        with pytest.raises(ValueError):
            ExperimentConfig(command="tomography", trials=0)

    def test_trial_defaults(self):
        assert ExperimentConfig(command="lower-bound").n_trials(default=200) == 200
        assert ExperimentConfig(command="lower-bound", trials=5).n_trials(default=200) == 5


class TestSchemas:
    def test_spectrum_rows_validate(self):
        rows, _ = run_spectrum(small_cfg("spectrum"))
        validate_rows(rows, SCHEMAS["spectrum"])

    def test_mismatched_rows_rejected(self):
        with pytest.raises(ValueError):
            validate_rows([{"bogus": 1}], SCHEMAS["spectrum"])

    def test_float_formatting_roundtrips(self):
        for v in (np.pi, 1e-17, 0.1, 3.0, np.float64(2.5e-13)):
            assert float(_fmt(v)) == float(v)
        assert _fmt(7) == "7"
        assert _fmt(True) == "1"

    def test_ci_scaling(self):
        rng = np.random.default_rng(0)
        vals = rng.standard_normal(2000)
        assert _ci_half(list(vals)) == pytest.approx(_ci_half(list(vals[:500])) / 2, rel=0.1)
        assert _ci_half([5.0]) == 0.0


class TestDeterminismAndParallelism:
    def test_rerun_byte_identical(self, tmp_path):
        cfg = small_cfg("tomography")
        run_command(cfg, tmp_path / "a")
        run_command(cfg, tmp_path / "b")
        a = (tmp_path / "a" / "tomography.csv").read_bytes()
        b = (tmp_path / "b" / "tomography.csv").read_bytes()
        assert a == b

    def test_parallel_equals_serial(self, tmp_path):
        run_command(small_cfg("tomography", jobs=1), tmp_path / "serial")
        run_command(small_cfg("tomography", jobs=3), tmp_path / "par")
        a = (tmp_path / "serial" / "tomography.csv").read_bytes()
        b = (tmp_path / "par" / "tomography.csv").read_bytes()
        assert a == b

    def test_spectrum_w1_single_row(self, tmp_path):
        run_command(small_cfg("spectrum", W=[1]), tmp_path)
        lines = (tmp_path / "spectrum.csv").read_text().strip().splitlines()
        assert len(lines) == 2

    def test_manifest_contents(self, tmp_path):
        run_command(small_cfg("spectrum"), tmp_path)
        manifest = json.loads((tmp_path / "spectrum.manifest.json").read_text())
        assert manifest["command"] == "spectrum"
        assert manifest["schema"] == SCHEMAS["spectrum"]
        assert manifest["config"]["seed"] == 7
        assert "wall_time_s" in manifest


class TestAggregates:
    def test_tomography_means_consistent(self):
        rows, _ = run_tomography(small_cfg("tomography"))
        by_group = {}
        for r in rows:
            by_group.setdefault((r["beta"], r["K"]), []).append(r)
        for group in by_group.values():
            mses = [r["test_mse"] for r in group]
            assert group[0]["mean_mse"] == pytest.approx(np.mean(mses), rel=1e-12)
            assert len({r["mean_mse"] for r in group}) == 1

    def test_degenerate_single_mode_runs(self):
        rows, ok = run_tomography(small_cfg("tomography", d=[1], K=[2]))
        assert ok and rows

    def test_full_bank_is_exact(self):
        # K = W: no compression, so the test error sits at the numerical floor
        rows, _ = run_tomography(small_cfg("tomography", K=[20], T=400, T_train=300))
        assert all(r["mean_mse"] <= 1e-8 for r in rows)


class TestCliParsing:
    def test_parse_beta(self):
        assert cli.parse_beta("0.5pi") == pytest.approx(0.5 * np.pi)
        assert cli.parse_beta("pi") == pytest.approx(np.pi)
        assert cli.parse_beta("1.25") == 1.25

    def test_parse_K(self):
        assert cli.parse_K("5:20:5") == [5, 10, 15, 20]
        assert cli.parse_K("5:7") == [5, 6, 7]
        assert cli.parse_K("3,9") == [3, 9]

    def test_usage_error_exit_code(self, capsys):
        assert cli.main(["no-such-command"]) == 1
        assert cli.main([]) == 1

    def test_bad_config_exit_code(self, capsys):
        rc = cli.main(["tomography", "--T", "100", "--T-train", "100"])
        assert rc == 1

    def test_io_error_exit_code(self, tmp_path, capsys):
        blocker = tmp_path / "blocked"
        blocker.write_text("not a directory")
        rc = cli.main(["spectrum", "--W", "4", "--out", str(blocker)])
        assert rc == 1

    def test_success_exit_code(self, tmp_path):
        rc = cli.main(["spectrum", "--W", "4", "--out", str(tmp_path)])
        assert rc == 0

    def test_check_failure_exit_code(self, tmp_path, monkeypatch):
        from sector_spectral import experiments

        def failing(cfg):
            return [{"check": "x", "context": "c", "measured": 1.0,
                     "threshold": 0.0, "comparison": "<=", "passed": 0}], False

        monkeypatch.setitem(experiments.RUNNERS, "theory-checks", failing)
        rc = cli.main(["theory-checks", "--out", str(tmp_path)])
        assert rc == 2
