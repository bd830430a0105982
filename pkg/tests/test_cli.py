import json
import subprocess
import sys

import pytest

from arlab.cli import run_command


def run(capsys, *argv):
    status = run_command(list(argv))
    out, err = capsys.readouterr()
    return status, (json.loads(out) if out.strip() else None), err


def test_rt_on_x2y(capsys):
    status, out, _ = run(capsys, "rt", "--ring", "eigrt", "--ideal", "m")
    assert status == 0 and out == {"rt": 3}


def test_rt_accepts_a_path(capsys, tmp_path):
    from arlab.fixtures import fixture_path
    status, out, _ = run(capsys, "rt", "--ring", str(fixture_path("eigrt2")), "--ideal", "m")
    assert (status, out) == (0, {"rt": 3})


def test_member(capsys):
    status, out, _ = run(capsys, "member", "--ring", "plane.json", "--poly", "x*y",
                         "--ideal", "sq")
    assert status == 0 and out == {"member": False}


def test_wang_table_from_cli(capsys):
    status, out, _ = run(capsys, "wang", "--ring", "xyz", "--kmax", "3")
    s = [row["s"] for row in out["quantities"]["table"]]
    assert status == 0 and s == sorted(set(s))


@pytest.mark.parametrize("argv, expected", [
    (["gb", "--ring", "plane", "--ideal", "(x^2, x*y + y^2)"], "groebner_basis"),
    (["intersect", "--ring", "plane", "--ideal", "x", "--ideal", "y"], {"ideal": ["x*y"]}),
    (["colon", "--ring", "eigrt2", "--ideal", "0", "--poly", "y"], {"ideal": ["x^2"]}),
    (["colon", "--ring", "plane", "--ideal", "mono", "--ideal", "x"], {"ideal": ["x", "y"]}),
    (["power", "--ring", "nilp2", "--ideal", "m", "--n", "3"], {"ideal": [], "n": 3}),
    (["eliminate", "--ring", "plane", "--ideal", "(x - y^2)", "--var", "y"],
     {"ideal": [], "vars": ["x"]}),
    (["saturate", "--ring", "sect7-a3b1"], {"ideal": ["x"], "exponent": 2}),
    (["hf", "--ring", "nilp2", "--n", "3"], {"values": [1, 2, 1, 0], "length": 4}),
    (["mu", "--ring", "plane", "--ideal", "(x^2, x*y, y^2, x^2 + y^2)"], {"mu": 3}),
    (["mult", "--ring", "semigroup2"], {"e": 3, "stable_from": 1}),
    (["dim", "--ring", "eigrt1"], {"dim": 1}),
    (["rees", "--ring", "plane", "--ideal", "m"], "defining_ideal"),
    (["rt-mod", "--ring", "plane", "--ideal", "m", "--ideal", "x"], {"rt": 1}),
    (["rt-principal", "--ring", "sect7-a3b1", "--poly", "x"], {"rt": 3}),
    (["rt-2gen", "--ring", "semigroup2", "--poly", "u0", "--poly", "u1"], "status"),
    (["ar", "--ring", "eigrt2", "--ideal", "m", "--ideal", "0", "--ideal", "xa"], "s"),
    (["check-thm2", "--ring", "plane", "--ideal", "m", "--ideal", "0", "--ideal", "x"],
     "verdict"),
    (["check-iv", "--ring", "nilp2", "--r", "2", "--sample", "x,y"], "verdict"),
    (["check-bounds", "--ring", "nilp2", "--ideal", "m"], "verdict"),
    (["check-bounds", "--ring", "semigroup1", "--kind", "cm", "--ideal", "m"], "verdict"),
    (["brt", "--ring", "eigrt3", "--decomp", "primary"], "brt"),
])
def test_subcommands_succeed(capsys, argv, expected):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    if isinstance(expected, str):
        assert expected in out
    else:
        # generator lists come out in Groebner-basis order
        canon = lambda d: {k: sorted(v) if k == "ideal" else v for k, v in d.items()}  # noqa: E731
        assert canon(out) == canon(expected)


def test_output_ideals_round_trip(capsys):
    from arlab.specfile import load_ring_spec
    from arlab.fixtures import fixture_path
    _, out, _ = run(capsys, "power", "--ring", "eigrt2", "--ideal", "m", "--n", "3")
    spec = load_ring_spec(fixture_path("eigrt2"))
    assert spec.presentation.ideal(out["ideal"]) == spec.ideal("m") ** 3


def test_failing_check_exits_one(capsys):
    status, out, _ = run(capsys, "check-iv", "--ring", "plane", "--r", "1")
    assert status == 1 and out["verdict"] == "fail" and out["certificate"]


def test_unmet_hypothesis_exits_zero(capsys):
    status, out, _ = run(capsys, "check-bounds", "--ring", "plane", "--ideal", "x")
    assert status == 0 and out["verdict"] == "inconclusive-hypothesis"


def test_bound_hit_is_inconclusive(capsys):
    status, out, _ = run(capsys, "rt-principal", "--ring", "nilp4", "--poly", "x",
                         "--bound", "2")
    assert status == 0 and out["status"] == "inconclusive"
    status, out, _ = run(capsys, "rt-2gen", "--ring", "nilp4", "--poly", "x", "--poly", "y",
                         "--bound", "2")
    assert status == 0 and out["status"] == "inconclusive"


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["rt"],
    ["rt", "--ring", "plane"],
    ["rt", "--ring", "plane", "--ideal", "nope"],
    ["rt", "--ring", "/nonexistent.json", "--ideal", "m"],
    ["member", "--ring", "plane", "--ideal", "m", "--poly", "x +"],
    ["member", "--ring", "plane", "--ideal", "m", "--poly", "w"],
    ["power", "--ring", "plane", "--ideal", "m"],
    ["power", "--ring", "plane", "--ideal", "m", "--n", "-1"],
    ["hf", "--ring", "plane", "--ideal", "(x + y^2)"],
    ["verify-paper", "--suite", "bogus"],
    ["check-bounds", "--ring", "plane", "--kind", "other", "--ideal", "m"],
    ["brt", "--ring", "eigrt2"],
    ["rt", "--ring", "plane", "--ideal", "m", "--bound", "many"],
])
def test_usage_errors_exit_two(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2 and out is None
    assert "error" in err


def test_out_file_and_field_choice(capsys, tmp_path):
    target = tmp_path / "rt.json"
    status, out, _ = run(capsys, "rt", "--ring", "eigrt2", "--ideal", "m", "--field", "qq",
                         "--out", str(target))
    assert status == 0 and out is None
    text = target.read_text(encoding="utf-8")
    assert text.endswith("\n") and json.loads(text) == {"rt": 3}


def test_fields_agree_on_examples(capsys):
    for ring in ("nilp3", "eigrt2", "semigroup2"):
        results = [run(capsys, "rt", "--ring", ring, "--ideal", "m", "--field", f)[1]
                   for f in ("fp", "qq")]
        assert results[0] == results[1]


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "arlab.cli", "rt", "--ring", "nilp2",
                           "--ideal", "m"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"rt": 2}
