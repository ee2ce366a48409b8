import json

import pytest

from quivercone.cli import run
from quivercone.io import format_quiver
from quivercone import loop_quiver, subspace_quiver


@pytest.fixture
def qfile(tmp_path):
    def make(q, d, name="q.qv"):
        path = tmp_path / name
        path.write_text(format_quiver(q, d))
        return str(path)

    return make


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_no_arguments_prints_usage(capsys):
    code, out, err = _run(capsys)
    assert code == 2 and "usage" in err


def test_unknown_flag_rejected(capsys, qfile):
    code, _, err = _run(capsys, "hat-s", qfile(loop_quiver(1), (3,)), "--bogus")
    assert code == 2 and "unrecognized" in err


def test_hat_s_loop(capsys, qfile):
    code, out, _ = _run(capsys, "hat-s", qfile(loop_quiver(1), (3,)))
    assert code == 0
    assert out.splitlines() == ["∅", "{1: 3}", "{1: 2,3}", "{1: 1,2,3}"]


@pytest.mark.parametrize("route", ["direct", "leg", "both"])
def test_hat_s_routes(capsys, qfile, route):
    path = qfile(subspace_quiver(2), (1, 1, 2))
    code, out, _ = _run(capsys, "hat-s", path, "--route", route)
    assert code == 0 and len(out.splitlines()) == 3 + 2 + 4


def test_member_traceless_two_loop(capsys, qfile, tmp_path):
    sfile = tmp_path / "s.txt"
    sfile.write_text("1: -3 1/2 5/2\n")
    code, out, _ = _run(capsys, "member", qfile(loop_quiver(2), (3,)), "--spectrum", str(sfile))
    assert code == 0 and out.startswith("inside=yes\ntrace=0")


def test_member_outside_prints_certificate(capsys, qfile, tmp_path):
    sfile = tmp_path / "s.txt"
    # traceless, but the larger eigenvalue at j sits below 3
    sfile.write_text("i1: -3\ni2: -1\nj: 2 2\n")
    code, out, _ = _run(capsys, "member", qfile(subspace_quiver(2), (1, 1, 2)), "--spectrum", str(sfile))
    assert code == 1
    assert "inside=no" in out and "certificate={" in out and "value=-1" in out


def test_member_trace_certificate(capsys, qfile, tmp_path):
    sfile = tmp_path / "s.txt"
    sfile.write_text("1: 1 2\n")
    code, out, _ = _run(capsys, "member", qfile(loop_quiver(1), (2,)), "--spectrum", str(sfile))
    assert code == 1 and "certificate=trace" in out


def test_member_bad_spectrum(capsys, qfile, tmp_path):
    sfile = tmp_path / "s.txt"
    sfile.write_text("1: 2 1\n")
    code, _, err = _run(capsys, "member", qfile(loop_quiver(1), (2,)), "--spectrum", str(sfile))
    assert code == 2 and "increasing" in err


def test_malformed_quiver_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.qv"
    path.write_text("vertex a\nvertex b\narrow a c\n")
    code, _, err = _run(capsys, "ineq", str(path))
    assert code == 2 and "bad.qv:3" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = _run(capsys, "ineq", str(tmp_path / "nope.qv"))
    assert code == 2 and "error" in err


@pytest.mark.parametrize("fmt", ["tuples", "matrix"])
def test_ineq_formats(capsys, qfile, fmt):
    code, out, _ = _run(capsys, "ineq", qfile(subspace_quiver(2), (1, 1, 2)), "--format", fmt)
    assert code == 0 and out.strip()
    if fmt == "matrix":
        lines = out.splitlines()
        assert lines[0].startswith("#") and lines[1].startswith("=")
        assert sum(line.startswith(">=") for line in lines) == 7


def test_schofield(capsys, qfile, a2):
    code, out, _ = _run(capsys, "schofield", qfile(a2, (1, 1)))
    assert code == 0 and out.splitlines() == ["0 0", "0 1", "1 1"]


def test_maximal_and_volume(capsys, qfile):
    code, out, _ = _run(capsys, "maximal", qfile(loop_quiver(2), (2,)))
    assert code == 0 and "direct=true" in out and "agree=true" in out
    code, out, _ = _run(capsys, "volume", qfile(subspace_quiver(3), (1, 1, 1, 2)))
    assert code == 0 and "direct=true" in out


def test_sample_check_deterministic(capsys, qfile):
    path = qfile(subspace_quiver(2), (1, 1, 2))
    first = _run(capsys, "sample-check", path, "--samples", "50", "--seed", "3")
    second = _run(capsys, "sample-check", path, "--samples", "50", "--seed", "3")
    assert first == second
    assert first[0] == 0 and first[1].splitlines()[-1] == "result=pass"


def test_sample_check_real_field(capsys, qfile):
    code, out, _ = _run(capsys, "sample-check", qfile(loop_quiver(2), (2,)), "--samples", "20", "--field", "real")
    assert code == 0 and "field=real" in out


def test_chain_check(capsys):
    code, out, _ = _run(capsys, "chain-check", "--spectrum", "-1 1")
    assert code == 0
    assert out.splitlines()[0] == "theta=-2 1" and out.splitlines()[-1] == "result=pass"


def test_chain_check_bad_input(capsys):
    assert _run(capsys, "chain-check", "--spectrum", "2 1")[0] == 2
    assert _run(capsys, "chain-check", "--spectrum", "x")[0] == 2


def test_tolerance_config(capsys, tmp_path):
    cfg = tmp_path / "tol.json"
    cfg.write_text(json.dumps({"chain_residual": 0.0}))
    # exact zero tolerance still passes a spectrum whose construction has no rounding
    code, out, _ = _run(capsys, "--tolerance-config", str(cfg), "chain-check", "--spectrum", "1 1")
    assert code == 0
    cfg.write_text(json.dumps({"not_a_field": 1}))
    assert _run(capsys, "--tolerance-config", str(cfg), "chain-check", "--spectrum", "1 1")[0] == 2


def test_output_is_repeatable(capsys, qfile):
    path = qfile(subspace_quiver(3), (1, 1, 1, 2))
    assert _run(capsys, "ineq", path) == _run(capsys, "ineq", path)
