import json
import subprocess
import sys

import pytest

from puiseuxnorm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if code == 0 else None), err


def test_normalize_veronese(capsys):
    code, rep, _ = run(capsys, "normalize", "x + x^(2/3)*y^(1/3) + y", "--degree-bound", "2")
    assert code == 0
    assert rep["distinguished_exponents"] == [["2/3", "1/3"]]
    assert rep["hilbert_basis"] == [["1", "0"], ["2/3", "1/3"], ["1/3", "2/3"], ["0", "1"]]
    assert rep["smooth"] is False and rep["saturated"] is False
    assert len(rep["toric"]["binomials"]) == 3
    assert rep["toric"]["complete_up_to_degree"] == 2
    assert rep["minimal_polynomial"]["degree"] == 3
    assert "timing_seconds" in rep


def test_normalize_two_roots(capsys):
    code, rep, _ = run(capsys, "normalize", "x^(1/2)+y^(1/2)", "--skip-toric")
    assert code == 0
    assert rep["smooth"] is True and rep["saturated"] is True
    assert rep["hilbert_basis"] == [["1/2", "0"], ["0", "1/2"]]
    assert rep["minimal_polynomial"]["text"] == "Y^4 + (-2*x - 2*y)*Y^2 + (x^2 - 2*x*y + y^2)"
    assert "toric" not in rep


def test_integral_series(capsys):
    code, rep, _ = run(capsys, "normalize", "x + y^2", "--skip-toric")
    assert rep["distinguished_exponents"] == [] and rep["smooth"] is True
    assert rep["minimal_polynomial"]["text"] == "Y + (-y^2 - x)"


def test_exponents_with_omega(capsys):
    code, rep, _ = run(capsys, "exponents", "x^(1/2) + x^(3/2)*y^5", "--omega", "1,2")
    assert rep["distinguished_exponents"] == [["1/2", "0"]]
    assert rep["span_group"]["index"] == 2


def test_saturate_exponent_list(capsys):
    code, rep, _ = run(capsys, "saturate", "(3/2,1,0);(2,3/2,1)")
    assert code == 0
    assert rep["smooth"] is True and len(rep["hilbert_basis"]) == 3


def test_toric_command(capsys):
    code, rep, _ = run(capsys, "toric", "(2/3,1/3)", "--degree-bound", "3")
    assert rep["toric"]["columns"] == [[3, 0], [2, 1], [1, 2], [0, 3]]
    assert len(rep["toric"]["binomials"]) == 3


def test_minpoly_command(capsys):
    code, rep, _ = run(capsys, "minpoly", "x^(1/2)*y^(1/2)")
    assert rep["minimal_polynomial"]["text"] == "Y^2 + (-x*y)"


@pytest.mark.parametrize(
    "gens, k", [("(1,1);(1,-1)", 2), ("(3,0);(0,3);(1,1)", 3)]
)
def test_from_hj(capsys, gens, k):
    code, rep, _ = run(capsys, "from-hj", gens, "--toric")
    assert code == 0
    assert rep["minimal_polynomial"]["text"] == f"Y^{k} + (-x*y)"
    assert rep["m"] == [k, k] and rep["round_trip"] is True
    assert len(rep["toric"]["binomials"]) == 1


def test_from_hj_smooth(capsys):
    code, rep, _ = run(capsys, "from-hj", "(1,0);(0,1)")
    assert rep["smooth"] is True and rep["hypersurface"] is False
    assert "no hypersurface" in rep["note"]


@pytest.mark.parametrize(
    "argv, message",
    [
        (["normalize", "x - x"], "empty support"),
        (["from-hj", "(1,1);(2,2)"], "not full rank"),
        (["normalize", "x^(-1)"], "nonnegative"),
        (["exponents", "x + y", "--omega", "1,0"], "positive"),
        (["exponents", "x + y", "--omega", "a"], "omega"),
        (["normalize"], "no input"),
        (["normalize", "--input", "/nonexistent/file"], "cannot read"),
    ],
)
def test_bad_input_exit_one(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert message in err


def test_input_file_and_determinism(capsys, tmp_path):
    path = tmp_path / "xi.txt"
    path.write_text("x + x^(2/3)*y^(1/3) + y\n")
    outs = []
    for argv in (["normalize", "--input", str(path)], ["normalize", "x + x^(2/3)*y^(1/3) + y"]):
        assert main(argv + ["--no-timing"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    assert "timing_seconds" not in json.loads(outs[0])
    assert outs[0].count("\n") == 1


def test_pretty_flag(capsys):
    main(["exponents", "x^(1/2)", "--no-timing", "--pretty"])
    assert capsys.readouterr().out.count("\n") > 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "puiseuxnorm", "exponents", "x^(1/2)", "--no-timing", "--pretty"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["distinguished_exponents"] == [["1/2"]]
