import json
from fractions import Fraction

import pytest

from heckemock import cli, heckepoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_psi(capsys):
    assert run(capsys, "psi", "1")[:2] == (0, "x - 744\n")
    assert run(capsys, "psi", "0")[:2] == (0, "1\n")
    code, out, _ = run(capsys, "psi", "3", "--json")
    assert code == 0
    assert json.loads(out)["coefficients"] == ["-36866976", "1069956", "-2232", "1"]


def test_fpoly(capsys):
    assert run(capsys, "fpoly", "2")[1] == "x^2 - 1728x\n"
    assert run(capsys, "fpoly", "3", "--split-endpoints")[1] == "x * (x - 768) * (x - 1728)\n"
    code, _, err = run(capsys, "fpoly", "1")
    assert code == 2 and "m must be >= 2" in err


def test_roots_text_and_csv(capsys):
    code, out, _ = run(capsys, "roots", "2")
    assert code == 0 and out.count("x = ") == 2
    code, out, err = run(capsys, "roots", "5", "--csv")
    lines = out.strip().splitlines()
    assert lines[0] == "m,l,x,theta,u"
    assert len(lines) == 6
    assert "roots in" in err
    xs = [float(r.split(",")[2]) for r in lines[1:]]
    assert xs == sorted(xs) and xs[0] == 0 and xs[-1] == 1728


def test_coeff(capsys):
    assert run(capsys, "coeff", "0")[1].strip() == "-2615348736000/691"
    assert run(capsys, "coeff", "-1")[1].strip() == "39916800"
    code, out, _ = run(capsys, "coeff", "1", "--json", "--precision", "30", "--cmax", "2000")
    assert code == 0
    assert json.loads(out)["value"]["value"].startswith("-73562460235.683")


def test_beta(capsys):
    code, out, _ = run(capsys, "beta")
    assert code == 0 and "2.8402873751675" in out


def test_bound_check(capsys):
    code, _, err = run(capsys, "bound-check", "2")
    assert code == 2 and "m >= 3" in err
    code, out, _ = run(capsys, "bound-check", "10", "--grid", "10", "--json")
    reps = json.loads(out)["reports"]
    assert code == 0 and len(reps) == 10 and all(r["pass"] for r in reps)


def test_divisor_poly(capsys):
    assert run(capsys, "divisor-poly", "8")[1] == "x^2\n"
    assert run(capsys, "divisor-poly", "12", "--form", "delta")[1] == "1\n"


def test_output_file(tmp_path, capsys):
    path = tmp_path / "psi.txt"
    assert cli.main(["psi", "2", "-o", str(path)]) == 0
    assert path.read_text() == "x^2 - 1488x + 159768\n"


def test_deterministic(capsys):
    first = run(capsys, "roots", "6", "--csv")[1]
    assert run(capsys, "roots", "6", "--csv")[1] == first


def test_verify_quick_passes(capsys):
    code, out, _ = run(capsys, "verify", "--level", "quick")
    assert code == 0
    assert "FAIL" not in out


def test_verify_detects_corrupt_constant(capsys, monkeypatch):
    monkeypatch.setattr(heckepoly, "A_ZERO", heckepoly.A_ZERO + Fraction(1, 691))
    code, out, _ = run(capsys, "verify", "--level", "quick")
    assert code == 1
    assert "[FAIL]  3. Closed form vs q-expansion" in out
    assert "[PASS]  2. Hecke polynomial examples" in out


def test_bad_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["psi"])
    assert exc.value.code == 2
