import json

import numpy as np
import pytest

from mertmat.cli import main

import _golden


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classes_text(capsys):
    code, out, _ = run_cli(capsys, "classes", "--n", "16")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "n 16" and lines[1] == "s 7"
    assert lines[2] == "1 [1..1]"
    assert lines[-1] == "16 [9..16]"
    assert "8 [6..8]" in lines


def test_classes_json(capsys):
    code, out, _ = run_cli(capsys, "classes", "--n", "16", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["n"] == 16 and data["s"] == 7
    assert data["reps"] == _golden.REPS
    assert data["intervals"][-1] == [9, 16]


def test_mertens(capsys):
    code, out, _ = run_cli(capsys, "mertens", "--k", "10000")
    assert code == 0 and out.strip() == "-23"


def test_table_matches_golden(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "16")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["*"] + [str(k) for k in _golden.REPS]
    got = np.array([[int(v) for v in line.split()[1:]] for line in lines[1:]])
    assert np.array_equal(got, _golden.TABLE)
    row_labels = [int(line.split()[0]) for line in lines[1:]]
    assert row_labels == _golden.REPS


def parse_matrix(out):
    return np.array([[int(v) for v in line.split(",")] for line in out.splitlines()])


@pytest.mark.parametrize(
    "which,attr",
    [
        ("T", "T"),
        ("U", "U_MATRIX"),
        ("M", "M_MATRIX"),
        ("rho-u", "RHO_U"),
        ("rho-mu", "RHO_MU"),
    ],
)
def test_matrix_golden(capsys, which, attr):
    code, out, _ = run_cli(capsys, "matrix", "--n", "16", "--which", which)
    assert code == 0
    assert np.array_equal(parse_matrix(out), getattr(_golden, attr))


@pytest.mark.parametrize("k", [2, 3, 4, 5, 8, 16])
def test_matrix_rho_k(capsys, k):
    code, out, _ = run_cli(capsys, "matrix", "--n", "16", "--which", f"rho-{k}")
    assert code == 0
    assert np.array_equal(parse_matrix(out), _golden.RHO[k])


def test_matrix_bad_selector(capsys):
    code, out, err = run_cli(capsys, "matrix", "--n", "16", "--which", "bogus")
    assert code == 1
    assert "error" in err and out == ""


def test_matrix_rho_k_non_rep(capsys):
    code, _, err = run_cli(capsys, "matrix", "--n", "16", "--which", "rho-6")
    assert code == 1 and "representative" in err


def test_verify_pass(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "360")
    assert code == 0
    lines = out.splitlines()
    assert lines == [
        "symmetry: pass",
        "dual-path: pass",
        "lemma-pattern: pass",
        "inverse-identity: pass",
    ]


def test_norm_power(capsys):
    code, out, _ = run_cli(capsys, "norm", "--n", "16")
    assert code == 0
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert float(fields["norm"]) == pytest.approx(4.003060658930591, rel=1e-9)
    assert int(fields["iterations"]) > 0
    assert fields["converged"] == "true"
    assert float(fields["w"]) == pytest.approx(0.000275869312, abs=1e-9)


def test_norm_dense(capsys):
    code, out, _ = run_cli(capsys, "norm", "--n", "16", "--method", "dense")
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert code == 0
    assert int(fields["iterations"]) == 0
    assert float(fields["norm"]) == pytest.approx(4.003060658930591, rel=1e-10)


def test_norm_n1_w_is_nan(capsys):
    code, out, _ = run_cli(capsys, "norm", "--n", "1")
    fields = dict(line.split(" ", 1) for line in out.splitlines())
    assert code == 0
    assert float(fields["norm"]) == 1.0
    assert fields["w"] == "nan"


def test_sweep_cli(capsys, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, out, _ = run_cli(
        capsys, "sweep", "--from", "10", "--to", "20", "--step", "5",
        "--out", str(out_path),
    )
    assert code == 0
    assert "3 records" in out
    lines = out_path.read_text().splitlines()
    assert lines[0].startswith("n,s,mertens_n")
    assert [line.split(",")[0] for line in lines[1:]] == ["10", "15", "20"]


def test_sweep_cli_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        code, _, _ = run_cli(
            capsys, "sweep", "--from", "900", "--to", "1100", "--restrict",
            "--seed", "5", "--out", str(path),
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_missing_required_flag():
    with pytest.raises(SystemExit) as exc:
        main(["classes"])
    assert exc.value.code == 2


def test_rejects_nonpositive_n():
    with pytest.raises(SystemExit):
        main(["classes", "--n", "0"])


def test_seed_changes_nothing_material(capsys):
    _, out1, _ = run_cli(capsys, "norm", "--n", "100", "--seed", "1")
    _, out2, _ = run_cli(capsys, "norm", "--n", "100", "--seed", "9")
    n1 = float(dict(line.split(" ", 1) for line in out1.splitlines())["norm"])
    n2 = float(dict(line.split(" ", 1) for line in out2.splitlines())["norm"])
    assert n1 == pytest.approx(n2, rel=1e-8)
