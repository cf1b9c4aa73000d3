"""
Desk-scale verification suites.

Each suite walks a universe of plactic biwords (every word up to the given
bounds, optionally followed by seeded random words) and records failures as
data.  A failure carries the offending input in text form so it can be
replayed with :func:`run_suite` and ``inputs=...``.
"""

from __future__ import annotations

import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .biword import (
    PlacticBiword,
    enumerate_plactic,
    knuth_class,
    knuth_connected,
    knuth_neighbors,
    restrict_gt,
)
from .bpd import BpdGrid, Tile
from .growth import (
    audit_squares,
    compatible_sequence,
    growth_by_insertion,
    growth_by_rules,
    insertion_grid,
    pipe_dream,
)
from .insertion import InsertionPath, insert
from .jdt import jdt_step, rect_steps, reversed_jdt, reversed_jdt_path
from .perm import decompose_decreasing

__all__ = ["VerifyReport", "SUITES", "run_suite", "random_plactic", "universe",
           "expected_pipes_after_jdt", "check_insertion", "consecutive_tail_ok"]


@dataclass
class VerifyReport:
    suite: str
    max_k: int
    max_len: int
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0
    random_cases: int = 0
    seed: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, case: str, message: str) -> None:
        self.failures.append({"input": case, "message": message})

    def summary(self) -> str:
        status = "OK" if self.ok else f"{len(self.failures)} FAILURES"
        extra = f" + {self.random_cases} random (seed {self.seed})" if self.random_cases else ""
        return (f"{self.suite}: {self.cases} cases (max_k={self.max_k}, max_len={self.max_len}{extra})"
                f" in {self.seconds:.2f}s: {status}")

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "max_k": self.max_k,
            "max_len": self.max_len,
            "random_cases": self.random_cases,
            "seed": self.seed,
            "cases": self.cases,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
        }


def random_plactic(rng: random.Random, max_k: int, max_len: int) -> PlacticBiword:
    length = rng.randint(1, max_len)
    ks = sorted((rng.randint(1, max_k) for _ in range(length)), reverse=True)
    return PlacticBiword(tuple((rng.randint(1, k), k) for k in ks))


def universe(max_k: int, max_len: int, random_cases: int = 0, seed: int = 0,
             random_k: int = 4, random_len: int = 6) -> Iterator[PlacticBiword]:
    yield from enumerate_plactic(max_k, max_len)
    rng = random.Random(seed)
    for _ in range(random_cases):
        yield random_plactic(rng, random_k, random_len)


# -- per-operation checks -------------------------------------------------

def check_insertion(before: BpdGrid, b: int, k: int, after: BpdGrid, path: InsertionPath) -> list[str]:
    """Structural facts every insertion must satisfy."""
    problems = []
    if not after.is_valid():
        problems.append("result is not a valid reduced grid")
    pi, rho = before.permutation(), after.permutation()
    if rho.length() != pi.length() + 1:
        problems.append(f"length went from {pi.length()} to {rho.length()}")
    if path.crossed_pair is None:
        problems.append("no terminal crossing")
    else:
        alpha, beta = path.crossed_pair
        inv = pi.inverse()
        if pi.transpose_values(alpha, beta) != rho or not inv(alpha) <= k < inv(beta):
            problems.append(f"{rho} is not t_{{{alpha},{beta}}}{pi} with a straddle at k={k}")
    tiles = after.count(Tile.CROSS), after.count(Tile.BLANK)
    if tiles != (rho.length(), rho.length()):
        problems.append(f"#cross, #blank = {tiles}, length {rho.length()}")
    p = path.pipes_through
    if any(x >= y for x, y in zip(p, p[1:])):
        problems.append(f"pipes {p} are not strictly increasing")
    if not consecutive_tail_ok(path):
        problems.append(f"pipes {p} are not consecutive after a droop from a diagonal elbow")
    return problems


def consecutive_tail_ok(path: InsertionPath) -> bool:
    """Once a droop starts at the elbow of pipe ``p`` in column ``p``, later pipes are ``p+1, p+2, ...``."""
    for cell, pipe in path.droops:
        if cell[1] == pipe:
            tail = path.pipes_through[path.pipes_through.index(pipe):]
            return tail == list(range(pipe, pipe + len(tail)))
    return True


def expected_pipes_after_jdt(pipes: list[int], i: int) -> tuple[list[int], bool]:
    """
    Pipes of ``D <- (b, k)`` predicted from the pipes of ``nabla(D) <- (b, k)``.

    Returns ``(prefix, open_ended)``: when ``open_ended`` the actual pipes must
    be ``prefix`` followed by a run ``p_l, p_l + 1, ...`` of length at least 2.
    """
    p, ell = list(pipes), len(pipes)
    if ell >= 2 and p[-2] == i and p[-1] == i + 1:
        return p[:-2], True
    if ell and p[-1] == i:
        return p[:-1] + [i + 1], False
    for j in range(ell - 1):
        if p[j] == i and p[j + 1] != i + 1:
            return p[:j] + [i + 1] + p[j + 1:], False
    return p, False


def _matches_law(actual: list[int], before: list[int], i: int) -> bool:
    expected, open_ended = expected_pipes_after_jdt(before, i)
    if not open_ended:
        return actual == expected
    start = before[-1]
    tail = actual[len(expected):]
    return (actual[:len(expected)] == expected and len(tail) >= 2
            and tail == list(range(start, start + len(tail))))


# -- suites ---------------------------------------------------------------

def _suite_growth(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    for q in words:
        report.cases += 1
        g1, g2 = growth_by_insertion(q), growth_by_rules(q)
        if g1 != g2:
            diff = [(i, j) for i in range(g1.a + 1) for j in range(g1.ell + 1) if g1[i, j] != g2[i, j]]
            report.fail(str(q), f"methods differ at cells {diff}")
            continue
        if audit_squares(g1):
            report.fail(str(q), f"squares {audit_squares(g1)} break the local rule")
        pd = pipe_dream(compatible_sequence(g1))
        if pd.permutation() != g1[0, g1.ell]:
            report.fail(str(q), f"pipe dream gives {pd.permutation()}, not {g1[0, g1.ell]}")


def _suite_rect(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    for q in words:
        report.cases += 1
        d = insertion_grid(q)
        steps = rect_steps(d)
        m = min(q.top)
        if d.first_blank_row() != m:
            report.fail(str(q), f"first blank row {d.first_blank_row()} is not the least letter {m}")
        out = steps[-1].grid if steps else d
        if out != insertion_grid(restrict_gt(q, m)):
            report.fail(str(q), f"rectification differs from the grid of the word above {m}")
        pops = [s.pop[0] for s in steps]
        if any(x <= y for x, y in zip(pops, pops[1:])):
            report.fail(str(q), f"pops {pops} are not strictly decreasing")
        if pops != decompose_decreasing(d.permutation() * out.permutation().inverse()):
            report.fail(str(q), f"pops {pops} differ from the decreasing factorisation")


def _suite_knuth(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    words = list(words)
    fibers: dict[BpdGrid, set[PlacticBiword]] = defaultdict(set)
    for q in words:
        fibers[insertion_grid(q)].add(q)
    for grid, members in fibers.items():
        report.cases += 1
        q0 = min(members, key=str)
        cls = knuth_class(q0)
        if not members <= cls:
            missing = sorted(str(w) for w in members - cls)
            report.fail(str(q0), f"same grid but not Knuth connected: {missing[:3]}")
        escaped = sorted(str(w) for w in cls if insertion_grid(w) != grid)
        if escaped:
            report.fail(str(q0), f"Knuth class leaves the fiber: {escaped[:3]}")
    for q in words:
        top = max(q.top)
        for nb in knuth_neighbors(q):
            for i in range(top + 1):
                if insertion_grid(restrict_gt(q, i)) != insertion_grid(restrict_gt(nb, i)):
                    report.fail(f"{q} {nb}", f"move changes the grid of letters above {i}")
    parse = PlacticBiword.parse
    report.cases += 2
    if knuth_connected(parse("1,2/3,3"), parse("1,2/3,2")):
        report.fail("1,2/3,3 1,2/3,2", "reported connected")
    if not knuth_connected(parse("1,3,2/3,3,3"), parse("1,3,2/3,3,2")):
        report.fail("1,3,2/3,3,3 1,3,2/3,3,2", "reported not connected")


def _commute_cases(q: PlacticBiword):
    """Every ``(b, k)`` meeting the commutation hypotheses for the grid of ``q``."""
    d = insertion_grid(q)
    if d.permutation().is_identity():
        return d, None, []
    step = jdt_step(d)
    _, c = step.pop
    fd = d.permutation().first_descent()
    return d, step, [(b, k) for k in range(1, int(fd) + 1) for b in range(c, k + 1)]


def _suite_commute(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    for q in words:
        d, step, cases = _commute_cases(q)
        for b, k in cases:
            report.cases += 1
            tag = f"{q} {b}/{k}"
            left = jdt_step(insert(d, b, k)[0]).grid
            right = insert(step.grid, b, k)[0]
            if left != right:
                report.fail(tag, "jeu de taquin does not commute with insertion")


def _suite_roundtrip(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    for q in words:
        d = insertion_grid(q)
        if d.permutation().is_identity():
            continue
        report.cases += 1
        step = jdt_step(d)
        a, r = step.pop
        back = reversed_jdt(step.grid, r, a)
        if back != d:
            report.fail(str(q), f"reversed jeu de taquin at ({r}, {a}) does not restore the grid")
        elif reversed_jdt_path(step.grid, r, a) != step.path[::-1]:
            report.fail(str(q), "reversed path does not retrace the forward path")


def _suite_invariants(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    for q in words:
        report.cases += 1
        grid = insertion_grid(PlacticBiword())
        for b, k in q.letters:
            new, path = insert(grid, b, k)
            for msg in check_insertion(grid, b, k, new, path):
                report.fail(str(q), f"inserting {b}/{k}: {msg}")
            grid = new
        current = grid
        while not current.permutation().is_identity():
            step = jdt_step(current)
            a = step.pop[0]
            if step.grid.permutation() != current.permutation().transpose_values(a, a + 1):
                report.fail(str(q), f"jeu de taquin popping {a} does not apply s_{a}")
            if not step.grid.is_valid():
                report.fail(str(q), "jeu de taquin produced an invalid grid")
            current = step.grid


def _suite_path_laws(report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    for q in words:
        d, step, cases = _commute_cases(q)
        for b, k in cases:
            report.cases += 1
            tag = f"{q} {b}/{k}"
            i = step.pop[0]
            _, p_after = insert(step.grid, b, k)
            _, p_before = insert(d, b, k)
            for p in (p_after, p_before):
                if not consecutive_tail_ok(p):
                    report.fail(tag, f"pipes {p.pipes_through} break the consecutive-pipe law")
            if not _matches_law(p_before.pipes_through, p_after.pipes_through, i):
                report.fail(tag, f"pop {i}: pipes {p_after.pipes_through} after jeu de taquin, "
                                 f"{p_before.pipes_through} before")


SUITES: dict[str, Callable[[VerifyReport, Iterable[PlacticBiword]], None]] = {
    "growth-equivalence": _suite_growth,
    "rect-strip": _suite_rect,
    "knuth": _suite_knuth,
    "commute": _suite_commute,
    "roundtrip": _suite_roundtrip,
    "invariants": _suite_invariants,
    "path-laws": _suite_path_laws,
}


def run_suite(suite: str, max_k: int = 3, max_len: int = 4, seed: int = 0,
              random_cases: int = 0, random_k: int = 4, random_len: int = 6,
              inputs: list[str] | None = None) -> VerifyReport:
    """
    Run one named suite.  ``inputs`` replaces the universe with explicit biwords,
    which is how recorded failures are replayed.
    """
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = VerifyReport(suite, max_k, max_len, random_cases=random_cases, seed=seed)
    if inputs is not None:
        words = [PlacticBiword.parse(t.split()[0]) for t in inputs]
    else:
        words = universe(max_k, max_len, random_cases, seed, random_k, random_len)
    start = time.perf_counter()
    try:
        _run_guarded(SUITES[suite], report, words)
    finally:
        report.seconds = time.perf_counter() - start
    return report


def _run_guarded(fn, report: VerifyReport, words: Iterable[PlacticBiword]) -> None:
    """Run the suite word by word so that an exception is recorded against its input."""
    if fn is _suite_knuth:
        fn(report, words)
        return
    for q in words:
        try:
            fn(report, [q])
        except Exception as exc:  # failures are data here
            report.fail(str(q), f"{type(exc).__name__}: {exc}")
