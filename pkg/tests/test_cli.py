import csv
import json
import math

import numpy as np
import pytest

from superstft.cli import _axis, _merge_axis_values, main


def _read_csv(path):
    with open(path) as fh:
        return list(csv.reader(fh))


def test_axis_parsing():
    np.testing.assert_allclose(_axis("-1:1:5"), np.linspace(-1, 1, 5))
    np.testing.assert_allclose(_axis("0.5"), [0.5])
    with pytest.raises(Exception):
        _axis("1:2")
    with pytest.raises(Exception):
        _axis("1:2:0")


def test_merge_axis_values():
    argv = ["spectrogram", "--u", "-3:3:61", "--mode", "closed"]
    merged = _merge_axis_values(argv)
    assert "--u=-3:3:61" in merged
    assert "--mode" in merged  # non-axis flags untouched


def test_spectrogram_csv_contract(tmp_path):
    out = tmp_path / "spec.csv"
    rc = main(["spectrogram", "--window", "gaussian", "--signal", "superosc",
               "--a", "2", "--n", "4", "--u", "-3:3:61", "--eta", "-3:3:61",
               "--mode", "both", "--out", str(out)])
    assert rc == 0
    rows = _read_csv(str(out))
    assert rows[0] == ["u", "eta", "re", "im", "abs", "abs_err"]
    assert len(rows) - 1 == 61 * 61
    # row-major with u as the outer loop
    us = [float(r[0]) for r in rows[1:]]
    assert len(set(us[:61])) == 1
    assert us[61] != us[0]
    # closed and quadrature agree far better than the contract asks
    assert max(float(r[5]) for r in rows[1:]) < 1e-7
    # %.17g fields round-trip exactly
    for r in rows[1:4]:
        for field in r[:5]:
            assert "%.17g" % float(field) == field
    # LF line endings
    raw = out.read_bytes()
    assert b"\r" not in raw


def test_spectrogram_hermite_and_limit(tmp_path):
    out = tmp_path / "h.csv"
    rc = main(["spectrogram", "--window", "hermite", "--order", "1",
               "--signal", "limit", "--a", "1.5", "--u", "-1:1:3",
               "--eta", "0:1:2", "--mode", "both", "--out", str(out)])
    assert rc == 0
    rows = _read_csv(str(out))
    assert len(rows) - 1 == 6
    assert max(float(r[5]) for r in rows[1:]) < 1e-8


def test_spectrogram_scalar_axis(tmp_path):
    out = tmp_path / "one.csv"
    rc = main(["spectrogram", "--n", "2", "--u", "0.5", "--eta", "0.25",
               "--out", str(out)])
    assert rc == 0
    rows = _read_csv(str(out))
    assert len(rows) - 1 == 1
    assert float(rows[1][0]) == 0.5 and float(rows[1][1]) == 0.25


def test_spectrogram_rejects_negative_order():
    with pytest.raises(SystemExit) as exc:
        main(["spectrogram", "--order", "-1", "--n", "2"])
    assert exc.value.code == 2


def test_verify_report(tmp_path):
    out = tmp_path / "report.json"
    rc = main(["verify", "--suite", "zak", "--json", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert rep["schema"] == 1
    assert rep["seed"] == 42
    assert all(case["pass"] for case in rep["suites"])
    keys = set(rep["suites"][0])
    assert keys == {"id", "paper_anchor", "params", "max_error", "tolerance",
                    "pass"}


def test_verify_hermite_suite_has_compact_case(tmp_path):
    out = tmp_path / "h.json"
    rc = main(["verify", "--suite", "hermite", "--json", str(out)])
    assert rc == 0
    rep = json.loads(out.read_text())
    assert "i_km_compact" in [case["id"] for case in rep["suites"]]


def test_verify_rejects_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_zak_frame_superosc(tmp_path, capsys):
    rc = main(["zak-frame", "--signal", "superosc-gaussian", "--a", "2",
               "--n", "4", "--resolution", "128"])
    assert rc == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"] == "Frame"
    assert {"schema", "lowerBound", "upperBound", "gridResolution",
            "verdict", "minLocation", "tolerance",
            "wienerEstimate"} <= set(rep)
    assert rep["wienerEstimate"]["heuristic"] is True


def test_zak_frame_hermite_window(capsys):
    rc = main(["zak-frame", "--window", "hermite", "--order", "1",
               "--resolution", "64"])
    assert rc == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["verdict"] in ("NotFrame", "Inconclusive")
    assert abs(rep["minLocation"][0]) < 1e-9
    assert abs(rep["minLocation"][1]) < 1e-9


def test_zak_frame_requires_subject():
    with pytest.raises(SystemExit) as exc:
        main(["zak-frame", "--resolution", "32"])
    assert exc.value.code == 2


def test_evolve_datum_row(tmp_path):
    out = tmp_path / "ev.csv"
    rc = main(["evolve", "--window", "gaussian", "--x0", "0", "--k0", "1",
               "--t", "0:1:11", "--x", "-4:4:81", "--normalized",
               "--out", str(out)])
    assert rc == 0
    rows = _read_csv(str(out))
    assert rows[0] == ["x", "t", "re", "im", "abs", "accuracy_flag"]
    assert len(rows) - 1 == 11 * 81
    # t-major ordering: the first 81 rows are the t = 0 slice
    assert all(float(r[1]) == 0.0 for r in rows[1:82])
    worst = 0.0
    for r in rows[1:82]:
        x = float(r[0])
        datum = np.exp(1j * x) * math.exp(-x * x / 2.0)
        got = complex(float(r[2]), float(r[3]))
        worst = max(worst, abs(got - datum))
    assert worst < 1e-9


def test_evolve_hermite_hazard_flag(tmp_path):
    out = tmp_path / "haz.csv"
    with pytest.warns(RuntimeWarning):
        rc = main(["evolve", "--window", "hermite", "--order", "1",
                   "--t", "2000", "--x", "0:1:3", "--out", str(out)])
    assert rc == 0
    rows = _read_csv(str(out))
    assert all(r[5] == "1" for r in rows[1:])


def test_evolve_superosc_mode(tmp_path):
    out = tmp_path / "so.csv"
    rc = main(["evolve", "--superosc", "--a", "2", "--n", "8",
               "--t", "0:0.5:2", "--x", "-1:1:5", "--out", str(out)])
    assert rc == 0
    rows = _read_csv(str(out))
    assert len(rows) - 1 == 10
    # t = 0 slice is F_n itself
    from superstft.superosc import SuperoscParams, f_n
    p = SuperoscParams(a=2.0, n=8)
    for r in rows[1:6]:
        got = complex(float(r[2]), float(r[3]))
        assert abs(got - f_n(p, float(r[0]))) < 1e-12
    assert all(r[5] == "0" for r in rows[1:])


def test_evolve_requires_grids():
    with pytest.raises(SystemExit) as exc:
        main(["evolve", "--window", "gaussian", "--t", "0:1:3"])
    assert exc.value.code == 2
