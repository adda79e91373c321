"""Command-line contract tests: exit codes, stdout CSV, file round-trips."""

import math

import numpy as np
import pytest

from schattenperturb.cli import main
from schattenperturb.linalg import load_matrix, save_matrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_norms_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--scope", "norms", "--seed", "0")
    assert code == 0
    assert out.startswith("check,checked,violations,worst_margin\n")
    assert "norm_dual_witness" in out


def test_verify_repeated_runs_identical(capsys):
    _, out1, _ = run_cli(capsys, "verify", "--scope", "subspace",
                         "--seed", "4")
    _, out2, _ = run_cli(capsys, "verify", "--scope", "subspace",
                         "--seed", "4")
    assert out1 == out2


def test_verify_fault_injection_names_the_bound(capsys):
    code, _, err = run_cli(capsys, "verify", "--scope", "bounds",
                           "--seed", "0", "--fault-inject", "thm1-constant")
    assert code == 1
    assert "bounds_master_soundness" in err


def test_verify_unknown_scope_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--scope", "bogus"])
    assert exc.value.code == 2


def test_bound_zero_noise(tmp_path, capsys):
    save_matrix(tmp_path / "a.csv", np.diag([3.0, 0.0]))
    save_matrix(tmp_path / "z.csv", np.zeros((2, 2)))
    code, out, _ = run_cli(capsys, "bound", "--matrix-a",
                           str(tmp_path / "a.csv"), "--matrix-z",
                           str(tmp_path / "z.csv"), "-r", "1")
    assert code == 0
    lines = out.splitlines()
    header = lines[0].split(",")
    row = lines[1].split(",")
    assert float(row[header.index("lhs_estimation")]) == pytest.approx(0.0)


def test_bound_shape_mismatch_exits_two(tmp_path, capsys):
    save_matrix(tmp_path / "a.csv", np.eye(2))
    save_matrix(tmp_path / "z.csv", np.zeros((3, 3)))
    code, _, err = run_cli(capsys, "bound", "--matrix-a",
                           str(tmp_path / "a.csv"), "--matrix-z",
                           str(tmp_path / "z.csv"), "-r", "1")
    assert code == 2
    assert "a.csv" in err or "z.csv" in err


def test_bound_unreadable_file_exits_two(tmp_path, capsys):
    code, _, err = run_cli(capsys, "bound", "--matrix-a",
                           str(tmp_path / "missing.csv"), "--matrix-z",
                           str(tmp_path / "missing.csv"), "-r", "1")
    assert code == 2
    assert "missing.csv" in err


def test_construct_tightness_round_trip(tmp_path, capsys):
    out_dir = tmp_path / "t"
    code, _, _ = run_cli(capsys, "construct", "tightness", "-r", "1",
                         "--q", "2", "--eta", "0.1", "--rows", "3",
                         "--cols", "3", "--out-dir", str(out_dir))
    assert code == 0
    np.testing.assert_allclose(load_matrix(out_dir / "A.csv"),
                               np.diag([2.0, 0.0, 0.0]))
    np.testing.assert_allclose(load_matrix(out_dir / "Z.csv"),
                               np.diag([-1.1, 1.0, 0.0]))
    meta = (out_dir / "metadata.txt").read_text()
    assert "kind=tightness" in meta and "eta=0.1" in meta

    code, out, _ = run_cli(capsys, "bound", "--matrix-a",
                           str(out_dir / "A.csv"), "--matrix-z",
                           str(out_dir / "Z.csv"), "-r", "1", "--q", "2")
    lines = out.splitlines()
    header = lines[0].split(",")
    row = lines[1].split(",")
    lhs = float(row[header.index("lhs_estimation")])
    assert lhs == pytest.approx(math.sqrt(5.0), abs=1e-9)
    # achieved ratio against the truncated noise norm at eta = 0.1
    assert lhs / 1.1 == pytest.approx(2.0328, abs=1e-4)
    thm1 = float(row[header.index("bound_thm1")])
    assert lhs <= thm1
    # the sharp construction genuinely crosses the 2 r^{1/q} ||Z|| baseline,
    # whose derivation assumes rank(A_hat - A) <= r; the report flags it
    assert row[header.index("violations")] == "rank_spectral"
    assert code == 1


def test_construct_minimax_shares_observation(tmp_path, capsys):
    out_dir = tmp_path / "m"
    code, _, _ = run_cli(capsys, "construct", "minimax", "-r", "1",
                         "--q", "1", "--xi", "1", "--rows", "4",
                         "--cols", "4", "--out-dir", str(out_dir))
    assert code == 0
    assert (out_dir / "B1.csv").read_bytes() == \
        (out_dir / "B2.csv").read_bytes()


def test_construct_example1(tmp_path, capsys):
    out_dir = tmp_path / "e"
    code, _, _ = run_cli(capsys, "construct", "example1", "--q", "2",
                         "--rows", "8", "--cols", "6", "--seed", "5",
                         "--out-dir", str(out_dir))
    assert code == 0
    spectrum = load_matrix(out_dir / "spectrum.csv")
    assert spectrum[0, 0] == 1.0
    s = np.linalg.svd(load_matrix(out_dir / "Z.csv"), compute_uv=False)
    np.testing.assert_allclose(s, spectrum[0], atol=1e-9)


def test_construct_example1_requires_seed(tmp_path, capsys):
    code, _, err = run_cli(capsys, "construct", "example1", "--out-dir",
                           str(tmp_path / "x"))
    assert code == 2
    assert "seed" in err


def test_construct_invalid_params_exit_two(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "construct", "tightness", "-r", "2",
                         "--rows", "3", "--cols", "6", "--out-dir",
                         str(tmp_path / "bad"))
    assert code == 2


def test_experiment_requires_seed(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["experiment", "estimation", "--out", str(tmp_path / "o.csv")])
    assert exc.value.code == 2


def test_experiment_trivial_run(tmp_path, capsys):
    out = tmp_path / "o.csv"
    code, _, err = run_cli(capsys, "experiment", "estimation", "--n", "20",
                           "--r-grid", "2", "--sigma", "0", "--no-spike",
                           "--trials", "1", "--seed", "0", "--out", str(out))
    assert code == 0
    assert "ordering:" in err and "FAIL" not in err
    row = out.read_text().splitlines()[1].split(",")
    assert [float(x) for x in row[2:6]] == pytest.approx([0.0] * 4, abs=1e-9)


def test_experiment_invalid_config_exits_two(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "experiment", "estimation", "--n", "10",
                         "--r-grid", "12", "--trials", "1", "--seed", "0",
                         "--out", str(tmp_path / "o.csv"))
    assert code == 2


def test_experiment_same_seed_identical_files(tmp_path, capsys):
    # at this desk scale the qualitative ordering does not hold, so the
    # command exits 1 — but the data must still be written, deterministically
    args = ["experiment", "projection", "--n", "20", "--r-grid", "2", "3",
            "--trials", "5", "--seed", "42"]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(args + ["--out", str(p1)]) == 1
    assert main(args + ["--out", str(p2), "--jobs", "3"]) == 1
    _, err = capsys.readouterr().out, capsys.readouterr().err
    assert p1.read_bytes() == p2.read_bytes()
    assert len(p1.read_bytes()) > 0


def test_experiment_ordering_passes_at_scale(tmp_path, capsys):
    out = tmp_path / "o.csv"
    code, _, err = run_cli(capsys, "experiment", "estimation", "--n", "80",
                           "--r-grid", "2", "4", "--trials", "5",
                           "--seed", "42", "--out", str(out))
    assert code == 0
    assert "FAIL" not in err
