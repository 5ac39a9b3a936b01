import json
import math
import subprocess
import sys

import numpy as np
import pytest

from rvnorm import cli, hnorm
from rvnorm.core_linalg import matrix_to_json
from rvnorm.distributions import Exponential, Normal, Rademacher


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_matrix(tmp_path, m, name="m.json"):
    p = tmp_path / name
    p.write_text(json.dumps(matrix_to_json(np.asarray(m))))
    return str(p)


def test_norm(capsys, tmp_path):
    path = write_matrix(tmp_path, [[1, 1], [1, 0]])
    code, out, _ = run(capsys, "norm", "--matrix", path, "--dist", "exponential", "--d", "4")
    assert code == 0
    res = json.loads(out)
    assert res["value"] ** 4 == pytest.approx(120)
    assert res["method"] == "closed_form"
    code, out, _ = run(capsys, "norm", "--matrix", path, "--dist", "gamma:alpha=1,beta=1", "--d", "4",
                       "--method", "mc", "--samples", "20000", "--seed", "3")
    res = json.loads(out)
    assert res["method"] == "monte_carlo" and res["stderr"] > 0


def test_norm_csv_input(capsys, tmp_path):
    p = tmp_path / "a.csv"
    p.write_text("2,0\n0,-1\n")
    code, out, _ = run(capsys, "norm", "--matrix", str(p), "--dist", "rademacher", "--d", "2")
    assert json.loads(out)["value"] == pytest.approx(math.sqrt(5))


def test_cnorm(capsys, tmp_path):
    path = write_matrix(tmp_path, np.roll(np.eye(3), 1, axis=1))
    code, out, _ = run(capsys, "cnorm", "--matrix", path, "--dist", "normal:mu=1,sigma=1", "--d", "2")
    assert code == 0
    # sigma^2 ||Z||_F^2 + mu^2 |tr Z|^2 = 3
    assert json.loads(out)["value"] ** 2 == pytest.approx(3)
    code, out, _ = run(capsys, "cnorm", "--matrix", path, "--dist", "normal:mu=1,sigma=1", "--d", "2",
                       "--method", "quad")
    assert json.loads(out)["method"] == "quadrature"


def test_chs(capsys, tmp_path):
    path = write_matrix(tmp_path, [[1, 1], [1, 0]])
    code, out, _ = run(capsys, "chs", "--matrix", path, "--d", "6", "--bounds")
    res = json.loads(out)
    assert res["value"] ** 6 == pytest.approx(13)
    assert res["bounds"]["lower"] <= res["value"] <= res["bounds"]["upper"]
    code, out, _ = run(capsys, "chs", "--matrix", path, "--d", "4", "--alpha", "3")
    assert json.loads(out)["method"] == "generalized_hunter"
    path = write_matrix(tmp_path, np.roll(np.eye(3), 1, axis=1), "c.json")
    code, out, _ = run(capsys, "chs", "--matrix", path, "--d", "6")
    res = json.loads(out)
    assert res["method"] == "det_series"
    assert res["value"] ** 6 == pytest.approx(29 / 20)
    code, _, err = run(capsys, "chs", "--matrix", path, "--d", "3")
    assert code == 2 and "OddDegree" in err


def test_partitions(capsys):
    code, out, _ = run(capsys, "partitions", "--d", "4")
    lines = out.strip().splitlines()
    assert lines[0] == "partition\tz\ty"
    assert lines[1:] == ["4\t4\t1", "3,1\t3\t4", "2,2\t8\t3", "2,1,1\t4\t6", "1,1,1,1\t24\t1"]
    code, _, err = run(capsys, "partitions", "--d", "40")
    assert code == 2


def test_birkhoff_and_hlp(capsys, tmp_path):
    d = np.array([[0.5, 0.5, 0], [0.25, 0.25, 0.5], [0.25, 0.25, 0.5]])
    path = write_matrix(tmp_path, d)
    code, out, _ = run(capsys, "birkhoff", "--matrix", path)
    res = json.loads(out)
    rebuilt = np.zeros((3, 3))
    for p, w in zip(res["permutations"], res["weights"]):
        rebuilt[np.arange(3), p] += w
    assert np.allclose(rebuilt, d)
    code, out, _ = run(capsys, "hlp", "--x", "5,3,1", "--y", "3,3,3")
    res = json.loads(out)
    m = np.array([complex(*e) for e in res["entries"]]).reshape(3, 3).real
    assert np.allclose(m @ [5, 3, 1], [3, 3, 3])
    code, _, err = run(capsys, "hlp", "--x", "3,3,3", "--y", "5,3,1")
    assert code == 2 and "NotMajorized" in err


def test_unit_circle_normal():
    spec = Normal(0, 1.5)
    for d in (1.5, 4.0):
        pts = cli.unit_circle(spec, d, directions=16)
        r = 1 / (math.sqrt(2) * 1.5 * (math.gamma((d + 1) / 2) / math.sqrt(math.pi)) ** (1 / d))
        for x, y in pts.points:
            assert math.hypot(x, y) == pytest.approx(r, rel=1e-9)


def test_unit_circle_rademacher_and_symmetry():
    pts = cli.unit_circle(Rademacher(), 2, directions=24)
    for x, y in pts.points:
        assert math.hypot(x, y) == pytest.approx(1, rel=1e-9)
    pts = cli.unit_circle(Exponential(), 4, directions=24)
    s = {(round(x, 8), round(y, 8)) for x, y in pts.points}
    assert s == {(round(y, 8), round(x, 8)) for x, y in pts.points}
    for x, y in pts.points:
        assert hnorm.norm_value(np.diag([x, y]), Exponential(), 4) == pytest.approx(1, abs=1e-8)
    with pytest.raises(Exception):
        cli.unit_circle(Exponential(), 4, directions=10)


def test_unit_circle_nested():
    inner = cli.unit_circle(Exponential(), 20, directions=8)
    outer = cli.unit_circle(Exponential(), 2, directions=8)
    for (a, b), (c, e) in zip(inner.points, outer.points):
        assert math.hypot(a, b) < math.hypot(c, e)


def test_unit_circle_cli(capsys):
    code, out, _ = run(capsys, "unit-circle", "--dist", "rademacher", "--d", "2", "--directions", "8")
    lines = out.strip().splitlines()
    assert lines[0] == "lambda1,lambda2" and len(lines) == 9
    x, y = map(float, lines[1].split(","))
    assert (x, y) == pytest.approx((1.0, 0.0))


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "chs-golden"],
    ["verify", "--suite", "axioms", "--dist", "rademacher", "--d", "4", "--trials", "100"],
    ["verify", "--suite", "birkhoff", "--trials", "500"],
    ["verify", "--suite", "schur", "--dist", "poisson:alpha=2", "--d", "6", "--trials", "50"],
    ["verify", "--suite", "bounds", "--dist", "normal:mu=0,sigma=1", "--d", "4", "--trials", "20"],
    ["verify", "--suite", "oracle", "--dist", "uniform:a=-1,b=2", "--d", "4", "--trials", "3"],
])
def test_verify_passes(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, out
    rows = out.strip().splitlines()
    assert rows[0] == "name\tleft\tright\tslack\tstatus"
    names = [r.split("\t")[0] for r in rows[1:]]
    assert names == sorted(names)
    assert all(r.endswith("PASS") for r in rows[1:])


def test_verify_is_reproducible(capsys):
    argv = ["verify", "--suite", "axioms", "--dist", "laplace:mu=0.5,beta=1", "--d", "6", "--trials", "10", "--seed", "5"]
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_verify_failure_exit(capsys, monkeypatch):
    from rvnorm.bounds import BoundReport
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [BoundReport("x", 2.0, 1.0, -1.0, False)])
    code, out, _ = run(capsys, "verify", "--suite", "chs-golden")
    assert code == 1 and out.strip().endswith("FAIL")


def test_bad_distribution(capsys, tmp_path):
    path = write_matrix(tmp_path, np.eye(2))
    code, _, err = run(capsys, "norm", "--matrix", path, "--dist", "cauchy", "--d", "2")
    assert code == 2 and "error" in err


def test_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "rvnorm.cli", "partitions", "--d", "3"],
                         capture_output=True, text=True, check=True).stdout
    assert out.splitlines()[1] == "3\t3\t1"
