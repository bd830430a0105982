import json

import pytest

from arlab.checks import CheckReport
from arlab.cli import run_command
from arlab.suite import SuiteResult, UnknownSuite, verify_paper


@pytest.fixture(scope="module")
def examples():
    return verify_paper("examples")


def test_examples_suite_passes(examples):
    assert examples.ok and examples.counts["fail"] == 0
    names = [r.check for r in examples.reports]
    assert names == sorted(names)
    assert all(n.startswith("examples/") for n in names)


def test_timings_only_on_request(examples):
    plain = examples.to_dict()
    assert all("seconds" not in r for r in plain["reports"])
    timed = examples.to_dict(timings=True)
    assert all("seconds" in r for r in timed["reports"])


def test_summary_counts_inconclusive_variants():
    res = SuiteResult("x", [CheckReport("a", verdict="pass"), CheckReport("b", verdict="fail"),
                            CheckReport("c", verdict="inconclusive-hypothesis")])
    assert res.counts == {"pass": 1, "fail": 1, "inconclusive": 1}
    assert not res.ok


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        verify_paper("nope")


def test_wang_suite_from_cli(capsys):
    assert run_command(["verify-paper", "--suite", "wang"]) == 0
    out, err = capsys.readouterr()
    data = json.loads(out)
    assert data["suite"] == "wang" and data["summary"]["pass"] == 1
    assert "wang/growth" in err


def test_theorems_suite_passes():
    res = verify_paper("theorems")
    assert res.ok, [r.to_dict() for r in res.reports if r.verdict == "fail"]
