"""Monte Carlo sweep tests at desk scale: determinism, soundness, ordering."""

import io

import numpy as np
import pytest

from schattenperturb.bounds import bound_thm2, estimate_low_rank
from schattenperturb.experiments import (DECAY_KINDS, ExperimentConfig,
                                         decay_spectrum, emit_csv,
                                         generate_instance, ordering_checks,
                                         run_estimation_sweep,
                                         run_projection_sweep, run_sweep)
from schattenperturb.norms import SchattenIndex, schatten_norm

CI_CFG = ExperimentConfig(n=40, r_grid=(2, 4, 6), trials=20, seed=0)


def test_decay_spectra():
    np.testing.assert_allclose(decay_spectrum("polynomial", 4),
                               [10.0, 5.0, 10.0 / 3.0, 2.5])
    np.testing.assert_allclose(decay_spectrum("exponential", 6),
                               [16.0, 8.0, 4.0, 2.0, 1.0, 0.5])
    with pytest.raises(ValueError):
        decay_spectrum("linear", 3)


def test_config_validation():
    with pytest.raises(ValueError):
        ExperimentConfig(trials=0)
    with pytest.raises(ValueError):
        ExperimentConfig(sigma=-0.1)
    with pytest.raises(ValueError):
        ExperimentConfig(decay="nope")
    with pytest.raises(ValueError):
        ExperimentConfig(n=10, r_grid=(4, 12))
    assert "polynomial" in DECAY_KINDS


def test_config_from_file(tmp_path):
    path = tmp_path / "cfg.txt"
    path.write_text("# comment\nn=40\nr_grid=2,4\nsigma=0.01\nspike=off\n"
                    "decay=exponential\ntrials=5\nq=inf\nseed=9\n")
    cfg = ExperimentConfig.from_file(path)
    assert cfg.n == 40 and cfg.r_grid == (2, 4) and cfg.sigma == 0.01
    assert cfg.spike is False and cfg.decay == "exponential"
    assert cfg.trials == 5 and cfg.q == SchattenIndex("inf") and cfg.seed == 9
    path.write_text("unknown_key=1\n")
    with pytest.raises(ValueError):
        ExperimentConfig.from_file(path)


def test_generate_instance_spectrum_and_noiseless_recovery():
    cfg = ExperimentConfig(n=30, r_grid=(4,), sigma=0.0, spike=False,
                           trials=1, seed=3)
    inst = generate_instance(cfg, 4, 0)
    assert np.all(inst.z == 0)
    s = np.linalg.svd(inst.a, compute_uv=False)
    np.testing.assert_allclose(s[:4], [10.0, 5.0, 10.0 / 3.0, 2.5],
                               atol=1e-9)
    a_hat, _, _ = estimate_low_rank(inst.b, 4)
    np.testing.assert_allclose(a_hat, inst.a, atol=1e-10)
    with pytest.raises(ValueError):
        generate_instance(cfg, 5, 0)


def test_generate_instance_sub_seeding():
    i1 = generate_instance(CI_CFG, 4, 7)
    i2 = generate_instance(CI_CFG, 4, 7)
    np.testing.assert_array_equal(i1.b, i2.b)
    i3 = generate_instance(CI_CFG, 4, 8)
    assert not np.array_equal(i1.b, i3.b)


def test_sweep_determinism_and_parallel_agreement():
    serial = run_sweep(CI_CFG, "estimation", n_jobs=1)
    again = run_sweep(CI_CFG, "estimation", n_jobs=1)
    parallel = run_sweep(CI_CFG, "estimation", n_jobs=4)
    assert serial.rows == again.rows
    assert serial.rows == parallel.rows
    with pytest.raises(ValueError):
        run_sweep(CI_CFG, "unknown")


def test_estimation_sweep_ordering():
    res = run_estimation_sweep(CI_CFG)
    assert res.columns == ("mean_true", "mean_thm1", "mean_triangle",
                           "mean_rank_spectral")
    assert res.ranks == [2, 4, 6]
    assert all(ordering_checks(res).values())


def test_projection_sweep_ordering_and_soundness():
    # the ordering between the two bounds only holds once sigma_1/sigma_r of
    # the signal is large enough; under polynomial decay that means r >= 6
    res = run_projection_sweep(ExperimentConfig(n=80, r_grid=(6, 8),
                                                trials=10, seed=0))
    assert all(ordering_checks(res).values())
    # soundness holds trial by trial, not just on averages
    for r in CI_CFG.r_grid:
        for trial in range(CI_CFG.trials):
            inst = generate_instance(CI_CFG, r, trial)
            a_hat, u_hat, _ = estimate_low_rank(inst.b, r)
            lhs = schatten_norm(inst.a - u_hat @ (u_hat.T @ inst.a), 2)
            assert lhs <= bound_thm2(inst.z, r, 2) + 1e-9


def test_trivial_sweep_all_zero():
    cfg = ExperimentConfig(n=20, r_grid=(2,), sigma=0.0, spike=False,
                           trials=1, seed=0)
    res = run_estimation_sweep(cfg)
    assert res.rows[0][2:] == pytest.approx((0.0, 0.0, 0.0, 0.0), abs=1e-9)
    assert all(ordering_checks(res).values())


def test_emit_csv_bytes_are_reproducible(tmp_path):
    cfg = ExperimentConfig(n=20, r_grid=(2, 3), trials=5, seed=42)
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(run_sweep(cfg, "projection"), p1)
    emit_csv(run_sweep(cfg, "projection", n_jobs=3), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_emit_csv_round_trip():
    res = run_sweep(ExperimentConfig(n=20, r_grid=(2,), trials=3, seed=1),
                    "estimation")
    buf = io.StringIO()
    emit_csv(res, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == ("n,r,mean_true,mean_thm1,mean_triangle,"
                        "mean_rank_spectral,trials,seed")
    fields = lines[1].split(",")
    assert fields[:2] == ["20", "2"] and fields[-2:] == ["3", "1"]
    parsed = [float(x) for x in fields[2:6]]
    for got, want in zip(parsed, res.rows[0][2:]):
        assert got == pytest.approx(want, rel=1e-11)
