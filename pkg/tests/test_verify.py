import json

import pytest

from bpdrsk.verify import SUITES, _matches_law, expected_pipes_after_jdt, run_suite


@pytest.mark.parametrize("suite", ["growth-equivalence", "rect-strip"])
def test_small_suites_pass(suite):
    report = run_suite(suite, max_k=2, max_len=3)
    assert report.ok and report.cases == 25


def test_every_suite_runs_small():
    for name in SUITES:
        report = run_suite(name, max_k=2, max_len=2, random_cases=20, seed=3)
        assert report.ok, report.failures


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")


def test_report_is_deterministic():
    a = run_suite("roundtrip", 1, 1, seed=11, random_cases=30).to_json()
    b = run_suite("roundtrip", 1, 1, seed=11, random_cases=30).to_json()
    a.pop("seconds"), b.pop("seconds")
    assert a == b
    json.dumps(a)


def test_replay_inputs():
    report = run_suite("commute", inputs=["1,3,1,2,1/3,3,2,2,1", "2,1/2,2"])
    assert report.ok and report.cases > 0


def test_failures_are_recorded_with_inputs(monkeypatch):
    import bpdrsk.verify as verify

    def broken(q):
        raise RuntimeError("boom")

    monkeypatch.setattr(verify, "growth_by_rules", broken)
    report = run_suite("growth-equivalence", inputs=["1/1"])
    assert not report.ok
    assert report.failures == [{"input": "1/1", "message": "RuntimeError: boom"}]
    assert "1 FAILURES" in report.summary()


@pytest.mark.parametrize("after, i, before", [
    ([2, 3, 5, 6, 7], 3, [2, 4, 5, 6, 7]),   # replace i by i + 1
    ([1, 2, 3, 4], 3, [1, 2, 4, 5, 6, 7]),   # last two pipes are i, i + 1
    ([2, 3], 3, [2, 4]),                     # i is the last pipe
    ([2, 3], 5, [2, 3]),                     # untouched
])
def test_pipe_set_law_examples(after, i, before):
    assert _matches_law(before, after, i)


def test_pipe_set_law_rejects():
    assert not _matches_law([2, 3, 5, 6, 7], [2, 3, 5, 6, 7], 3)
    # the open-ended run needs at least two pipes
    assert not _matches_law([1, 2, 4], [1, 2, 3, 4], 3)
    assert expected_pipes_after_jdt([1, 2, 3, 4], 3) == ([1, 2], True)
