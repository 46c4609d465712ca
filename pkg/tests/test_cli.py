"""End-to-end CLI behavior: output shapes, exit codes, determinism."""

import json

import pytest

from conftest import parse_csv, run_cli


def test_classify_modulated_json():
    rc, out = run_cli(["classify", "--xi", "-0.75"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["status"] == "Incomplete"
    assert payload["toeplitz"]["injective"] is False
    assert payload["citation"]


def test_classify_exact_boundary():
    # the =-form keeps argparse from reading the rational as a flag
    rc, out = run_cli(["classify", "--xi=-1/2"])
    assert rc == 0
    assert json.loads(out)["status"] == "CompleteOnly"


def test_classify_window_csv():
    rc, out = run_cli(["classify", "--window", "sawtooth", "--format", "csv"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["status", "injective", "bounded_below", "invertible",
                      "citation"]
    assert rows[0][0] == "CompleteOnly"


def test_classify_json_window():
    rc, out = run_cli(["classify", "--window", '{"kind": "constant", "re": 2}'])
    assert rc == 0
    assert json.loads(out)["status"] == "RieszBasis"


def test_bounds_sweep_csv():
    rc, out = run_cli(["bounds", "--window", "sawtooth", "--M", "4,8,16,32"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["window", "xi", "M", "A_M", "B_M", "tail", "rigorous",
                      "verdict"]
    assert [int(r[2]) for r in rows] == [4, 8, 16, 32]
    a_values = [float(r[3]) for r in rows]
    assert all(lo <= hi + 1e-9 for hi, lo in zip(a_values, a_values[1:]))
    assert rows[0][7] == "CompleteOnly"


def test_bounds_accepts_xi():
    rc, out = run_cli(["bounds", "--xi", "1/4", "--M", "8"])
    assert rc == 0
    _, rows = parse_csv(out)
    assert rows[0][1] == "1/4"
    assert float(rows[0][3]) > 0.3


def test_expsys_sweep():
    rc, out = run_cli(["expsys", "--xi", "0.4", "--M", "4,8"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header[:4] == ["window", "xi", "M", "A_M"]
    assert len(rows) == 2
    assert all(float(r[3]) > 0.0 for r in rows)
    assert rows[0][7] == "RieszBasis"


def test_spectrum_summary_json():
    rc, out = run_cli(["spectrum", "--window", "two_plus_cos", "--N", "8"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["recipe"] == "toeplitz"
    assert payload["N"] == 8
    assert payload["hermitian"] is True
    assert len(payload["eigs"]) == 8
    assert all(1 - 1e-9 <= v <= 3 + 1e-9 for v in payload["eigs"])
    assert payload["sigma_min"] <= payload["sigma_max"]


def test_spectrum_non_hermitian_summary():
    rc, out = run_cli(["spectrum", "--xi", "0.75", "--N", "6"])
    assert rc == 0
    payload = json.loads(out)
    assert payload["hermitian"] is False
    assert payload["eigs"] is None


def test_spectrum_csv_dump():
    rc, out = run_cli(["spectrum", "--window", "sawtooth", "--N", "3",
                       "--format", "csv", "--recipe", "hankel"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["i", "j", "re", "im"]
    assert len(rows) == 9


def test_witness_csv():
    rc, out = run_cli(["witness", "--t", "0.75", "--format", "json"])
    assert rc == 0
    payload = json.loads(out)
    values = {entry["n"]: complex(entry["re"], entry["im"])
              for entry in payload["values"]}
    assert abs(values[0]) > 0.1
    assert all(abs(values[n]) < 1e-8 for n in range(2, 13))
    rc, out = run_cli(["witness", "--t", "0.75", "--format", "csv"])
    header, rows = parse_csv(out)
    assert header == ["t", "n", "frequency", "re", "im", "modulus"]
    assert len(rows) == 21


def test_dynsample_csv():
    rc, out = run_cli(["dynsample", "--window", "sawtooth", "--N", "16",
                       "--seed", "3"])
    assert rc == 0
    header, rows = parse_csv(out)
    assert header == ["experiment", "N", "seed", "relative_error",
                      "condition_number", "residual"]
    row = rows[0]
    assert row[0] == "split:sawtooth"
    assert int(row[1]) == 16 and int(row[2]) == 3
    assert float(row[3]) < 1e-8
    assert float(row[4]) >= 1.0


def test_derivsample_even():
    rc, out = run_cli(["derivsample", "--even", "--M", "0,8"])
    assert rc == 0
    _, rows = parse_csv(out)
    assert rows[0][0] == "derivative_even"
    assert float(rows[0][2]) == pytest.approx(25.0 / 24.0, abs=1e-10)
    assert float(rows[1][2]) >= 11.0 / 24.0 - 1e-9


def test_derivsample_full():
    rc, out = run_cli(["derivsample", "--M", "4,8"])
    assert rc == 0
    _, rows = parse_csv(out)
    values = [float(r[2]) for r in rows]
    assert values[1] < values[0]


def test_density():
    rc, out = run_cli(["density", "--xi", "0.4", "--format", "csv"])
    assert rc == 0
    _, rows = parse_csv(out)
    assert float(rows[0][1]) == pytest.approx(1.0)
    rc, out = run_cli(["density", "--xi", "3/4"])
    assert json.loads(out)["upper_beurling_density"] == pytest.approx(1.0)


@pytest.mark.parametrize("argv", [
    ["classify", "--window", "nope"],
    ["classify"],
    ["classify", "--xi", "abc"],
    ["witness", "--t", "0.2"],
    ["bounds", "--window", "sawtooth", "--M", "0"],
    ["derivsample", "--M", "0"],
    ["spectrum", "--window", "sawtooth", "--N", "100000"],
])
def test_usage_errors_exit_2(argv):
    rc, _ = run_cli(argv)
    assert rc == 2


def test_numerical_failure_exits_3():
    rc, _ = run_cli(["dynsample", "--window", '{"kind": "constant", "re": 0}',
                     "--N", "4"])
    assert rc == 3


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "verdict.json"
    rc, out = run_cli(["classify", "--xi", "1/4", "--out", str(target)])
    assert rc == 0
    assert out == ""
    assert json.loads(target.read_text())["status"] == "RieszBasis"


def test_in_process_determinism():
    first = run_cli(["bounds", "--window", "sign", "--M", "4,8"])
    second = run_cli(["bounds", "--window", "sign", "--M", "4,8"])
    assert first == second


def test_section_cap_respects_environment(monkeypatch):
    monkeypatch.setenv("FRAMESCOPE_MAX_N", "8")
    rc, _ = run_cli(["spectrum", "--window", "sawtooth", "--N", "9"])
    assert rc == 2
    rc, _ = run_cli(["spectrum", "--window", "sawtooth", "--N", "8"])
    assert rc == 0


def test_report_writes_portfolio(tmp_path):
    out_dir = tmp_path / "report"
    rc, out = run_cli(["report", "--out-dir", str(out_dir), "--seed", "0"])
    assert rc == 0
    expected = {"bounds_windows.csv", "bounds_windows.png", "expsys.csv",
                "expsys.png", "witness.csv", "witness.png", "derivative.csv",
                "derivative.png", "dynsample.csv", "dynsample.png",
                "classification.json"}
    names = {line.rsplit("/", 1)[-1] for line in out.splitlines()}
    assert expected <= names
    for name in expected:
        assert (out_dir / name).stat().st_size > 0
    table = json.loads((out_dir / "classification.json").read_text())
    assert table["sawtooth"]["status"] == "CompleteOnly"
    assert table["modulated(3/4)"]["status"] == "FrameNotRiesz"
