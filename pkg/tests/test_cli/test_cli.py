from __future__ import annotations
import csv
import json
import math
from typing import Dict
import pytest

if __name__ == "__main__":
    pytest.main([__file__])

from stressshield import __version__
from stressshield.cli import arg_types
from stressshield.cli.exit_code import ExitCode
from stressshield.cli.main import main


def _kv(text: str) -> Dict[str, str]:
    result: Dict[str, str] = {}
    for line in text.splitlines():
        key, _, value = line.partition("=")
        result.setdefault(key, value)
    return result


def _floats(text: str):
    return [float(v) for v in text.split(",")]


def test_join_value_flags() -> None:
    argv = ["solve", "--sigma", "-5,-3,0", "--plane"]
    assert arg_types.join_value_flags(argv) == ["solve", "--sigma=-5,-3,0", "--plane"]
    assert arg_types.join_value_flags(["map", "--range"]) == ["map", "--range"]


def test_value_parsers() -> None:
    assert arg_types.float_list("1,-2.5,3e1") == (1.0, -2.5, 30.0)
    assert arg_types.float_range("-2,2") == (-2.0, 2.0)
    assert arg_types.seed_value("0x10") == 16
    for fn, text in [
        (arg_types.float_list, "1,a"),
        (arg_types.float_list, "1,nan"),
        (arg_types.float_range, "2,1"),
        (arg_types.positive_int, "0"),
        (arg_types.seed_value, "-1"),
    ]:
        with pytest.raises(Exception):
            fn(text)


def test_version(capsys) -> None:
    assert main(["version"]) == ExitCode.SUCCESS
    assert capsys.readouterr().out.strip() == __version__


def test_no_command(capsys) -> None:
    assert main([]) == ExitCode.USAGE


def test_solve_tensile(capsys) -> None:
    code = main(["solve", "--mode", "tensile", "--sigma", "4,2,-1,0,0,0"])
    assert code == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert out["mode"] == "tensile"
    assert float(out["lambda_m"]) == pytest.approx(2.0, abs=1e-12)
    assert _floats(out["total"]) == pytest.approx([2.0, 0.0, 1.0, 0.0, 0.0, 0.0], abs=1e-12)
    assert _floats(out["direction"]) == pytest.approx([0.0, 0.0, 1.0], abs=1e-12)
    assert float(out["sigma_rel"]) == pytest.approx(math.sqrt(5.0 / 21.0), abs=1e-12)
    assert out["feasible"] == "1"
    assert out["rule"] == "exact"


def test_solve_compressive_infeasible(capsys) -> None:
    code = main(["solve", "--mode", "compressive", "--sigma", "1,1,1,0,0,0"])
    assert code == ExitCode.INFEASIBLE
    captured = capsys.readouterr()
    out = _kv(captured.out)
    assert out["feasible"] == "0"
    assert out["total"] == ""
    assert out["lambda_m"] == ""
    assert "No admissible field" in captured.err


def test_solve_unconstrained_infeasible(capsys) -> None:
    code = main(["solve", "--sigma", "-1,-1,-1,0,0,0"])
    assert code == ExitCode.INFEASIBLE
    out = _kv(capsys.readouterr().out)
    assert out["mode"] == "unconstrained"
    assert float(out["sigma_rel"]) == 1.0
    assert _floats(out["total"]) == [-1.0, -1.0, -1.0, 0.0, 0.0, 0.0]


def test_solve_plane(capsys) -> None:
    code = main(["solve", "--plane", "--sigma", "-5,-3,0"])
    assert code == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert out["mode"] == "plane"
    assert float(out["lambda_m"]) == pytest.approx(1.0, abs=1e-12)
    assert _floats(out["total"]) == pytest.approx([-4.0, -4.0, 0.0, 0.0, 0.0, 0.0], abs=1e-12)


def test_solve_plane_six_components(capsys) -> None:
    assert main(["solve", "--mode", "plane", "--sigma", "4,8,0,0,0,0"]) == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert float(out["lambda_m"]) == pytest.approx(6.0, abs=1e-12)
    assert main(["solve", "--mode", "plane", "--sigma", "4,8,1,0,0,0"]) == ExitCode.USAGE


def test_solve_json(capsys) -> None:
    code = main(["solve", "--mode", "compressive", "--sigma", "0.5,-2,-2,0,0,0", "--json"])
    assert code == ExitCode.SUCCESS
    data = json.loads(capsys.readouterr().out)
    assert list(data) == ["mode", "lambda_m", "alpha", "direction", "total", "sigma_rel", "case", "feasible"]
    assert data["lambda_m"] == pytest.approx(0.5, abs=1e-12)
    assert data["total"] == pytest.approx([0.0, -2.5, -1.5, 0.0, 0.0, 0.0], abs=1e-12)
    assert data["feasible"] is True


def test_solve_kv_round_trip(capsys) -> None:
    assert main(["solve", "--sigma", "0.3,-1.2,2,0.4,-0.1,0.25"]) == ExitCode.SUCCESS
    kv = _kv(capsys.readouterr().out)
    assert main(["solve", "--sigma", "0.3,-1.2,2,0.4,-0.1,0.25", "--json"]) == ExitCode.SUCCESS
    data = json.loads(capsys.readouterr().out)
    assert float(kv["sigma_rel"]) == data["sigma_rel"]
    assert float(kv["lambda_m"]) == data["lambda_m"]
    assert _floats(kv["total"]) == data["total"]


def test_solve_all_choices(capsys) -> None:
    assert main(["solve", "--sigma", "-1,1,1,0,0,0", "--all-choices"]) == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert float(out["sigma_rel_1"]) == pytest.approx(0.0, abs=1e-12)
    assert out["feasible_1"] == "1"
    assert out["feasible_2"] == "0"


def test_solve_all_choices_json(capsys) -> None:
    assert main(["solve", "--sigma", "-1,1,1,0,0,0", "--all-choices", "--json"]) == ExitCode.SUCCESS
    data = json.loads(capsys.readouterr().out)
    choices = data["all_choices"]
    assert len(choices) == 3
    assert choices[0]["sigma_rel"] == pytest.approx(0.0, abs=1e-12)
    assert [c["feasible"] for c in choices] == [True, False, False]
    assert choices[2]["sigma_rel"] == pytest.approx(math.sqrt(8.0 / 9.0), abs=1e-12)


@pytest.mark.parametrize(
    "argv",
    [
        ["solve"],
        ["solve", "--sigma", "1,2"],
        ["solve", "--sigma", "1,2,3,0,0,0", "--mode", "bogus"],
        ["solve", "--sigma", "1,2,3,0,0,0", "--epsr", "2"],
        ["solve", "--sigma", "1,2,3,0,0,0", "--eps0", "0"],
        ["solve", "--sigma", "1,2,3,0,0,0", "--mode", "tensile", "--plane"],
        ["map", "--out", "x.csv"],
        ["mc", "--mode", "tensile", "--samples", "0"],
        ["mc", "--mode", "tensile", "--seed", "-1"],
        ["check", "--mode", "plane", "--trials", "x"],
    ],
)
def test_usage_errors(argv, capsys) -> None:
    assert main(argv) == ExitCode.USAGE


def test_map_plane(tmp_path_fn, capsys) -> None:
    fnm = tmp_path_fn / "plane.csv"
    code = main(["map", "--mode", "plane", "--grid", "4", "--range", "-2,2", "--out", str(fnm)])
    assert code == ExitCode.SUCCESS
    with open(fnm, "r", encoding="utf-8", newline="") as file:
        rows = list(csv.reader(file))
    assert rows[0] == ["a", "b", "sigma_rel", "feasible"]
    assert len(rows) == 17
    assert float(rows[1][0]) == -2.0 and float(rows[1][1]) == -2.0
    assert float(rows[2][1]) == -2.0
    assert all(r[3] == "1" for r in rows[1:])
    assert "Wrote 16 rows" in capsys.readouterr().out


def test_map_unconstrained_sentinel(tmp_path_fn) -> None:
    fnm = tmp_path_fn / "unc.csv"
    assert main(["map", "--mode", "unconstrained", "--grid", "4", "--out", str(fnm)]) == ExitCode.SUCCESS
    with open(fnm, "r", encoding="utf-8", newline="") as file:
        rows = list(csv.reader(file))
    assert len(rows) == 17
    # θ = 2π/3, φ = 4π/3 lies in the all negative octant without a real field
    row = rows[1 + 2 * 4 + 2]
    assert row[3] == "0"
    assert row[2] == "1"


def test_map_compressive_sentinel(tmp_path_fn) -> None:
    fnm = tmp_path_fn / "comp.csv"
    assert main(["map", "--mode", "compressive", "--grid", "9", "--out", str(fnm)]) == ExitCode.SUCCESS
    with open(fnm, "r", encoding="utf-8", newline="") as file:
        rows = list(csv.reader(file))
    assert len(rows) == 82
    # θ = π/4, φ = π/4 has three positive eigenvalues
    row = rows[1 + 2 * 9 + 1]
    assert row[3] == "0"
    assert row[2] == ""


def test_map_unwritable(tmp_path_fn, capsys) -> None:
    fnm = tmp_path_fn / "missing" / "map.csv"
    assert main(["map", "--mode", "plane", "--grid", "3", "--out", str(fnm)]) == ExitCode.IO
    assert "error" in capsys.readouterr().err


def test_map_quiet(tmp_path_fn, capsys) -> None:
    fnm = tmp_path_fn / "quiet.csv"
    assert main(["map", "--mode", "plane", "--grid", "3", "--out", str(fnm), "--quiet"]) == ExitCode.SUCCESS
    captured = capsys.readouterr()
    assert captured.out == ""
    assert fnm.exists()


def test_mc(capsys) -> None:
    code = main(["mc", "--mode", "tensile", "--samples", "2000", "--seed", "3"])
    assert code == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert out["mode"] == "tensile"
    assert int(out["n"]) == 2000
    assert int(out["seed"]) == 3
    assert out["policy"] == "exclude"
    assert out["rule"] == "literal"
    assert out["generator"] == "PCG64"
    assert 0.0 < float(out["mean"]) < 1.0


def test_mc_json_matches_kv(capsys) -> None:
    main(["mc", "--mode", "unconstrained", "--samples", "1500", "--seed", "8"])
    kv = _kv(capsys.readouterr().out)
    main(["mc", "--mode", "unconstrained", "--samples", "1500", "--seed", "8", "--json"])
    data = json.loads(capsys.readouterr().out)
    assert float(kv["mean"]) == data["mean"]
    assert data["policy"] == "count-as-one"


def test_mc_env_seed(monkeypatch, capsys) -> None:
    monkeypatch.setenv("STRESS_SHIELD_SEED", "5")
    assert main(["mc", "--mode", "compressive", "--samples", "500"]) == ExitCode.SUCCESS
    assert _kv(capsys.readouterr().out)["seed"] == "5"
    assert main(["mc", "--mode", "compressive", "--samples", "500", "--seed", "6"]) == ExitCode.SUCCESS
    assert _kv(capsys.readouterr().out)["seed"] == "6"
    monkeypatch.setenv("STRESS_SHIELD_SEED", "abc")
    assert main(["mc", "--mode", "compressive", "--samples", "500"]) == ExitCode.USAGE


def test_mc_plane(capsys) -> None:
    assert main(["mc", "--mode", "plane", "--samples", "100000"]) == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert float(out["mean"]) == pytest.approx(float(out["analytic"]), abs=1e-6)


def test_check_passes(capsys) -> None:
    assert main(["check", "--mode", "plane", "--trials", "20", "--seed", "1"]) == ExitCode.SUCCESS
    out = _kv(capsys.readouterr().out)
    assert out["passed"] == "1"
    assert out["violations"] == "0"


def test_check_json(capsys) -> None:
    assert main(["check", "--mode", "tensile", "--trials", "10", "--json"]) == ExitCode.SUCCESS
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] is True
    assert data["trials"] == 10


def test_check_failed(capsys) -> None:
    # a negative tolerance flags every trial
    assert main(["check", "--mode", "plane", "--trials", "5", "--tol", "-1"]) == ExitCode.CHECK_FAILED
    captured = capsys.readouterr()
    assert _kv(captured.out)["passed"] == "0"
    assert "Check failed" in captured.err
