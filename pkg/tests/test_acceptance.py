"""
The nine acceptance criteria, each reported as one PASS/FAIL line at the end of
the pytest run.  Run directly with ``python tests/test_acceptance.py``.
"""

import time

import pytest

from bpdrsk.biword import PlacticBiword
from bpdrsk.growth import _phi, compatible_sequence, growth_by_insertion, growth_by_rules, pipe_dream
from bpdrsk.perm import Permutation
from bpdrsk.verify import run_suite

from conftest import ACCEPTANCE_LINES, EXAMPLE, EXAMPLE_CELLS

EXHAUSTIVE = dict(max_k=3, max_len=4)
RANDOM = dict(random_cases=10_000, seed=2024, random_k=4, random_len=6)


def record(number, title, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}: {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def suite_detail(report):
    head = f"{report.cases} cases in {report.seconds:.1f}s"
    if report.ok:
        return head
    first = report.failures[0]
    return f"{head}, {len(report.failures)} failures, first {first['input']}: {first['message']}"


def test_1_golden_diagram():
    _phi.cache_clear()
    start = time.perf_counter()
    q = PlacticBiword.parse(EXAMPLE)
    by_insertion, by_rules = growth_by_insertion(q), growth_by_rules(q)
    seconds = time.perf_counter() - start
    ok = (
        by_insertion.text_cells() == EXAMPLE_CELLS
        and by_rules.text_cells() == EXAMPLE_CELLS
        and by_insertion.render_ascii() == by_rules.render_ascii()
        and by_insertion.to_json() == by_rules.to_json()
        and seconds < 1.0
    )
    record(1, "golden growth diagram by both methods", ok, f"24 cells, {seconds:.3f}s")


def test_2_golden_compatible_sequence():
    _phi.cache_clear()
    start = time.perf_counter()
    cs = compatible_sequence(growth_by_rules(PlacticBiword.parse(EXAMPLE)))
    pd = pipe_dream(cs)
    seconds = time.perf_counter() - start
    ok = (
        cs.a_seq == (4, 3, 1, 2, 3)
        and cs.r_seq == (1, 1, 1, 2, 3)
        and pd.is_reduced()
        and pd.permutation() == Permutation.parse("25314")
        and seconds < 1.0
    )
    record(2, "golden compatible sequence and pipe dream", ok,
           f"a={list(cs.a_seq)} r={list(cs.r_seq)} perm {pd.permutation()}, {seconds:.3f}s")


def test_3_growth_rule_equivalence():
    report = run_suite("growth-equivalence", **EXHAUSTIVE, **RANDOM)
    ok = report.ok and report.cases >= 422 + 10_000 and report.seconds < 300
    record(3, "local rules agree with insertion", ok, suite_detail(report))


def test_4_rect_strip():
    report = run_suite("rect-strip", **EXHAUSTIVE, **RANDOM)
    record(4, "rectification removes the least letters", report.ok, suite_detail(report))


def test_5_knuth():
    report = run_suite("knuth", **EXHAUSTIVE)
    record(5, "insertion fibers are Knuth classes", report.ok, suite_detail(report))


def test_6_commutation():
    report = run_suite("commute", **EXHAUSTIVE)
    record(6, "jeu de taquin commutes with insertion", report.ok and report.cases > 0, suite_detail(report))


def test_7_round_trip():
    report = run_suite("roundtrip", **EXHAUSTIVE, **RANDOM)
    record(7, "reversed jeu de taquin undoes jeu de taquin", report.ok, suite_detail(report))


def test_8_structural_invariants():
    report = run_suite("invariants", **EXHAUSTIVE)
    record(8, "grid and length invariants after every operation", report.ok, suite_detail(report))


def test_9_path_laws():
    report = run_suite("path-laws", **EXHAUSTIVE)
    record(9, "consecutive-pipe and pipe-set laws", report.ok, suite_detail(report))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
