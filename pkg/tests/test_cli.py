import pytest

from pntverify import cli


def run_cli(args, capsys):
    code = cli.main(args)
    return code, capsys.readouterr().out


def test_pnt_csv_output(capsys):
    code, out = run_cli(["pnt", "--max", "10000"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "x,pi,theta,psi,pi_ratio,theta_ratio,psi_ratio,r_error"
    last = lines[-1].split(",")
    assert last[0] == "10000"
    assert last[1] == "1229"
    assert float(last[4]) == pytest.approx(1.131951, abs=1e-6)


def test_verify_suite_exit_zero(capsys):
    code, out = run_cli(["verify", "--suite", "moebius", "--max", "2000"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "suite,check,status,witness_x,value"
    assert all(",pass," in line for line in lines[1:])


def test_verify_unknown_suite_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nosuch"])
    assert exc.value.code == 2
    assert "moebius" in capsys.readouterr().err


def test_max_below_minimum_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "moebius", "--max", "5"])
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    args = ["verify", "--suite", "combinatorics", "--seed", "42"]
    _, first = run_cli(args, capsys)
    _, second = run_cli(args, capsys)
    assert first == second
    _, other_seed = run_cli(["verify", "--suite", "combinatorics", "--seed", "43"], capsys)
    assert other_seed.splitlines()[0] == first.splitlines()[0]


def test_out_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "out.csv"
    code, out = run_cli(["tables", "--max", "1000", "--out", str(path)], capsys)
    assert code == 0
    assert out == ""
    text = path.read_text()
    assert text.startswith("x,pi,theta,psi,r_error\n")
    assert "\r" not in text


def test_estimate_identity(capsys):
    code, out = run_cli(["estimate", "--identity", "harmonic_log", "--max", "1000"], capsys)
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert row[0] == "harmonic_log"
    assert float(row[1]) == pytest.approx(1.0, abs=1e-12)
    assert float(row[2]) == 1.0


def test_iteration_suite(capsys):
    code, out = run_cli(["verify", "--suite", "iteration"], capsys)
    assert code == 0
    assert "final_term_small,pass" in out
