import cmath
import csv
import json
import math
import subprocess
import sys

import pytest

from fig8 import cli
from fig8.figure_eight_core import KAPPA, alexander


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if code == 0 and out.strip() else None)


@pytest.mark.parametrize(
    "text,want",
    [("1", 1), ("1+0.5i", 1 + 0.5j), ("1-0.5i", 1 - 0.5j), ("2.5i", 2.5j), ("-i", -1j),
     ("1e-3+2E1i", 0.001 + 20j), (" 1 + i ", 1 + 1j), ("kappa", KAPPA)],
)
def test_parse_complex(text, want):
    assert cli.parse_complex(text) == want


@pytest.mark.parametrize("text", ["", "1+", "i1", "1+0.5j", "abc", "1++2i", "nan"])
def test_parse_complex_rejects(text):
    with pytest.raises(cli.UsageError):
        cli.parse_complex(text)


def test_classify_examples(capsys):
    for xi, label in [("1+0.5i", "GammaMinus"), ("1.5+0.5i", "GammaPlus"),
                      ("0.3+0.3i", "OmegaCapXi"), ("1+2i", "OutsideXi")]:
        code, rec = run(capsys, "classify", "--xi", xi)
        assert code == 0
        assert rec["results"]["label"] == label
        assert rec["provenance"]["regime"] == label
        assert rec["schema_version"] == cli.SCHEMA_VERSION


def test_jones_trivial_and_limit(capsys):
    code, rec = run(capsys, "jones", "--xi", "0", "--n", "7")
    assert code == 0
    assert rec["results"]["value_if_representable"] == {"re": 1.0, "im": 0.0}
    code, rec = run(capsys, "jones", "--xi", "1+0.5i", "--n", "400")
    v = rec["results"]["value_if_representable"]
    want = 1 / alexander(cmath.exp(1 + 0.5j))
    assert abs(complex(v["re"], v["im"]) - want) < 1e-3


def test_jones_potential_route(capsys):
    _, a = run(capsys, "jones", "--xi", "1+0.5i", "--n", "10")
    _, b = run(capsys, "jones", "--xi", "1+0.5i", "--n", "10", "--via", "potential")
    ra, rb = a["results"], b["results"]
    assert abs(ra["log_mag"] - rb["log_mag"]) < 1e-6
    assert abs(cmath.exp(1j * (ra["arg"] - rb["arg"])) - 1) < 1e-6


def test_huge_value_is_not_representable(capsys):
    code, rec = run(capsys, "jones", "--xi", "800", "--n", "3")
    assert code == 0
    assert rec["results"]["value_if_representable"] is None
    assert rec["results"]["log_mag"] > 700


def test_predict_and_cs(capsys):
    code, rec = run(capsys, "predict", "--xi", "1.2+0.8i", "--n", "50")
    assert code == 0 and rec["provenance"]["conjectural"] is True
    code, rec = run(capsys, "cs", "--xi", "kappa")
    assert code == 0
    cs = rec["results"]["cs"]
    assert abs(cs["re"]) < 1e-12 and abs(cs["im"] + KAPPA * math.pi / 2) < 1e-12


def test_exit_codes(capsys):
    assert cli.main(["classify", "--xi", "one"]) == 1
    assert cli.main(["classify"]) == 1
    assert cli.main(["bogus"]) == 1
    assert cli.main(["cs", "--xi", "0.3+2i"]) == 2
    assert cli.main(["jones", "--xi", "1", "--n", "0"]) == 2
    assert cli.main(["study", "--xi", "1+0.5i", "--n-list", "10,5,20"]) == 2
    capsys.readouterr()


def test_nan_result_exits_numeric(capsys):
    assert cli._emit({"x": math.nan}) == 3
    assert capsys.readouterr().out == ""


@pytest.mark.parametrize("cmd", ["classify", "jones", "predict", "study", "cs", "grid", "selftest"])
def test_help(cmd, capsys):
    assert cli.main([cmd, "--help"]) == 0
    assert "--" in capsys.readouterr().out


def test_byte_identical_runs():
    argv = [sys.executable, "-m", "fig8", "study", "--xi", "1+0.5i", "--n-list", "20,40,80"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_study_csv(tmp_path, capsys):
    out = tmp_path / "s.csv"
    code, rec = run(capsys, "study", "--xi", "1+0.5i", "--n-list", "100,200,400", "--out", str(out))
    assert code == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["N", "exact_logmag", "exact_arg", "pred_logmag", "pred_arg", "err"]
    assert [r[0] for r in rows[1:]] == ["100", "200", "400"]
    assert -2.4 <= rec["results"]["fitted_order"] <= -1.6


def test_grid_corners(tmp_path, capsys):
    out = tmp_path / "g.csv"
    code, _ = run(capsys, "grid", "--xi", "1+0.5i", "--quantity", "ReF",
                  "--window", "0", "1", "-0.25", "0.25", "--resolution", "2", "2", "--out", str(out))
    assert code == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["x", "y", "value"]
    assert [(float(r[0]), float(r[1])) for r in rows[1:]] == [(0, -0.25), (1, -0.25), (0, 0.25), (1, 0.25)]


def test_grid_ref_shows_saddle_height(tmp_path, capsys):
    out = tmp_path / "g.csv"
    code, _ = run(capsys, "grid", "--xi", "1.5+0.5i", "--quantity", "ReF",
                  "--window", "-0.1", "1.1", "-0.6", "0.4", "--resolution", "25", "21", "--out", str(out))
    assert code == 0
    vals = [float(r[2]) for r in list(csv.reader(out.open()))[1:] if r[2] != "nan"]
    assert max(vals) > 0


def test_grid_masks(tmp_path, capsys):
    out = tmp_path / "m.csv"
    code, _ = run(capsys, "grid", "--quantity", "RegionMask",
                  "--window", "0.2", "2", "0.1", "1.4", "--resolution", "5", "4", "--out", str(out))
    assert code == 0
    labels = {r[2] for r in list(csv.reader(out.open()))[1:]}
    assert "OutsideXi" in labels and len(labels) > 1
    code, _ = run(capsys, "grid", "--xi", "1.5+0.5i", "--quantity", "HVMask",
                  "--window", "0", "1", "-0.2", "0.2", "--resolution", "3", "3", "--out", str(out))
    assert code == 0
    for r in list(csv.reader(out.open()))[1:]:
        assert r[2] == "nan" or r[2].startswith("H")
    assert cli.main(["grid", "--quantity", "ReF", "--window", "0", "1", "0", "1",
                     "--resolution", "2", "2", "--out", str(out)]) == 1
    capsys.readouterr()


def test_config_precedence(tmp_path, capsys):
    conf = tmp_path / "fig8.conf"
    conf.write_text("# band width\nzero_tol = 0.5\n")
    _, rec = run(capsys, "classify", "--xi", "1+0.5i", "--config", str(conf))
    # a band this wide swallows the point into the Omega boundary
    assert rec["results"]["label"] == "OmegaBoundary"
    _, rec = run(capsys, "classify", "--xi", "1+0.5i", "--config", str(conf), "--zero-tol", "1e-9")
    assert rec["results"]["label"] == "GammaMinus"
    conf.write_text("colour = blue\n")
    assert cli.main(["classify", "--xi", "1", "--config", str(conf)]) == 1
    assert cli.main(["classify", "--xi", "1", "--config", str(tmp_path / "missing")]) == 1
    capsys.readouterr()


def test_selftest(capsys):
    code, rec = run(capsys, "selftest")
    assert code == 0
    assert rec["results"]["passed"]
    assert len(rec["results"]["checks"]) >= 10
