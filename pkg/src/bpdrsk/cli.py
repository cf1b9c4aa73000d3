"""
Command line front end.

Exit codes: 0 success, 1 bad input, 2 an internal invariant failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .biword import ClassTooLarge, NotPlactic, PlacticBiword, knuth_class, knuth_connected
from .bpd import BpdGrid, InvalidGrid
from .growth import (
    InvariantBreach,
    MalformedSquare,
    NotReduced,
    compatible_sequence,
    growth_by_insertion,
    growth_by_rules,
    insertion_grid,
    pipe_dream,
)
from .insertion import DroopBlocked, PreconditionViolated, insert
from .jdt import JdtFailed, NoBlank, jdt_step, rect_steps, reversed_jdt, reversed_jdt_path
from .perm import decompose_decreasing
from .verify import SUITES, run_suite

INPUT_ERRORS = (NotPlactic, InvalidGrid, PreconditionViolated, JdtFailed, NoBlank,
                ClassTooLarge, json.JSONDecodeError, OSError, KeyError, ValueError)
BREACHES = (InvariantBreach, MalformedSquare, NotReduced, DroopBlocked, AssertionError)


class Breach(Exception):
    """An invariant failed; reported with exit code 2."""


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _biword(text: str) -> PlacticBiword:
    return PlacticBiword.parse(text)


def _load_grid(args) -> BpdGrid:
    if getattr(args, "grid", None):
        return BpdGrid.from_json(Path(args.grid).read_text())
    if getattr(args, "biword", None) is not None:
        return insertion_grid(_biword(args.biword))
    raise ValueError("give --grid FILE or --biword WORD")


def _shown(grid: BpdGrid) -> BpdGrid:
    """Smallest drawing of a grid; the identity is shown as a single tile."""
    grid = grid.shrink()
    return grid.extend(1) if grid.n == 0 else grid


def _path_json(cells) -> list[list[int]]:
    return [list(c) for c in cells]


def cmd_insert(args) -> int:
    q = _biword(args.biword)
    grid = insertion_grid(PlacticBiword())
    steps, lines = [], []
    for b, k in q.letters:
        grid, path = insert(grid, b, k)
        grid = _shown(grid)
        steps.append({"letter": [b, k], "perm": str(grid.permutation()), "grid": grid.rows(),
                      "path": _path_json(path.cells), "pipes": path.pipes_through})
        if args.trace:
            lines += [f"insert {b}/{k}  ->  {grid.permutation()}", grid.ascii(),
                      f"path {path.cells}  pipes {path.pipes_through}", ""]
    grid = _shown(grid)
    lines += [f"perm {grid.permutation()}", grid.ascii()]
    _emit(args, {"biword": str(q), "steps": steps, "perm": str(grid.permutation()), "grid": grid.rows()},
          "\n".join(lines))
    return 0


def cmd_growth(args) -> int:
    q = _biword(args.biword)
    if args.method == "insertion":
        g = growth_by_insertion(q)
    else:
        g = growth_by_rules(q)
    agree = None
    if args.method == "both":
        other = growth_by_insertion(q)
        agree = other == g and other.render_ascii() == g.render_ascii()
    if args.render == "json" or args.json:
        payload = g.to_json()
        if agree is not None:
            payload["methods_agree"] = agree
        print(json.dumps(payload, indent=2))
    else:
        cs = compatible_sequence(g)
        print(g.render_ascii())
        print()
        print(f"compatible sequence  a = {list(cs.a_seq)}  r = {list(cs.r_seq)}")
        print(f"pipe dream crosses   {pipe_dream(cs).sorted_crosses()}")
        if agree is not None:
            print("METHODS AGREE" if agree else "METHODS DISAGREE")
    if agree is False:
        raise Breach("growth methods disagree")
    return 0


def _jdt_step_json(result) -> dict:
    g = _shown(result.grid)
    return {"perm": str(g.permutation()), "grid": g.rows(), "path": _path_json(result.path),
            "pop": list(result.pop)}


def cmd_jdt(args) -> int:
    grid = _load_grid(args)
    result = jdt_step(grid)
    out = _shown(result.grid)
    text = [f"pop (a, r) = {result.pop}"]
    if args.steps:
        text.append(f"path {result.path}")
    text += [f"perm {out.permutation()}", out.ascii()]
    _emit(args, {"steps": [_jdt_step_json(result)]}, "\n".join(text))
    return 0


def cmd_rect(args) -> int:
    grid = _load_grid(args)
    steps = rect_steps(grid)
    out = _shown(steps[-1].grid if steps else grid)
    I = decompose_decreasing(grid.permutation() * out.permutation().inverse())
    text = [f"pop (a, r) = {s.pop}  path {s.path}" for s in steps]
    text += [f"I = {I}", f"perm {out.permutation()}", out.ascii()]
    _emit(args, {"steps": [_jdt_step_json(s) for s in steps], "I": I,
                 "perm": str(out.permutation()), "grid": out.rows()}, "\n".join(text))
    return 0


def cmd_rjdt(args) -> int:
    grid = _load_grid(args)
    out = _shown(reversed_jdt(grid, args.row, args.col))
    path = reversed_jdt_path(grid, args.row, args.col)
    text = [f"path {path}", f"perm {out.permutation()}", out.ascii()]
    _emit(args, {"steps": [{"perm": str(out.permutation()), "grid": out.rows(),
                            "path": _path_json(path), "pop": [args.col, args.row]}]}, "\n".join(text))
    return 0


def cmd_knuth(args) -> int:
    if args.pair:
        q1, q2 = (_biword(t) for t in args.pair)
        connected = knuth_connected(q1, q2, args.max)
        _emit(args, {"pair": [str(q1), str(q2)], "connected": connected},
              "CONNECTED" if connected else "NOT CONNECTED")
        return 0
    q = _biword(args.cls)
    words = sorted(str(w) for w in knuth_class(q, args.max))
    _emit(args, {"class": words, "size": len(words)}, "\n".join(words + [f"{len(words)} words"]))
    return 0


def cmd_render(args) -> int:
    if args.what == "growth":
        g = growth_by_rules(_biword(args.biword))
        _emit(args, g.to_json(), g.render_ascii())
    elif args.what == "pipe-dream":
        pd = pipe_dream(compatible_sequence(growth_by_rules(_biword(args.biword))))
        _emit(args, {"crosses": [list(c) for c in pd.sorted_crosses()], "perm": str(pd.permutation())},
              pd.ascii() + f"\nperm {pd.permutation()}")
    else:
        grid = _shown(_load_grid(args))
        _emit(args, grid.to_json(), grid.ascii())
    return 0


def cmd_verify(args) -> int:
    inputs = None
    if args.replay:
        data = json.loads(Path(args.replay).read_text())
        reports = data if isinstance(data, list) else [data]
        jobs = [(r["suite"], [f["input"] for f in r["failures"]]) for r in reports]
    else:
        names = list(SUITES) if args.suite == "all" else [args.suite]
        if any(n not in SUITES for n in names):
            raise ValueError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
        jobs = [(n, inputs) for n in names]
    reports = [run_suite(name, args.max_k, args.max_len, args.seed, args.random, inputs=inp)
               for name, inp in jobs]
    if args.out:
        Path(args.out).write_text(json.dumps([r.to_json() for r in reports], indent=2))
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
            for f in r.failures[:10]:
                print(f"  {f['input']}: {f['message']}")
    return 0 if all(r.ok for r in reports) else 2


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json", action="store_true", default=default(False), help="emit JSON")
    p.add_argument("--seed", type=int, default=default(0), help="seed for random cases")
    p.add_argument("--max-k", type=int, default=default(3), help="largest row bound in enumerations")
    p.add_argument("--max-len", type=int, default=default(4), help="longest word in enumerations")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bpdrsk", parents=[_global_flags(False)], allow_abbrev=False,
                                     description="Insertion, jeu de taquin and growth diagrams on bumpless pipe dreams.")
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    p = sub.add_parser("insert", parents=common, allow_abbrev=False, help="insert a biword into the identity grid")
    p.add_argument("--biword", required=True)
    p.add_argument("--trace", action="store_true", help="print every intermediate grid")
    p.set_defaults(func=cmd_insert)

    p = sub.add_parser("growth", parents=common, allow_abbrev=False, help="growth diagram of a biword")
    p.add_argument("--biword", required=True)
    p.add_argument("--method", choices=["rules", "insertion", "both"], default="rules")
    p.add_argument("--render", choices=["ascii", "json"], default="ascii")
    p.set_defaults(func=cmd_growth)

    for name, func, helptext in [("jdt", cmd_jdt, "one jeu de taquin step"),
                                 ("rect", cmd_rect, "rectify the first row holding blanks")]:
        p = sub.add_parser(name, parents=common, help=helptext, allow_abbrev=False)
        p.add_argument("--grid", help="grid JSON file")
        p.add_argument("--biword", help="use the insertion grid of this biword")
        if name == "jdt":
            p.add_argument("--steps", action="store_true", help="print the path")
        p.set_defaults(func=func)

    p = sub.add_parser("rjdt", parents=common, allow_abbrev=False, help="reversed jeu de taquin")
    p.add_argument("--grid")
    p.add_argument("--biword")
    p.add_argument("--row", type=int, required=True, help="row r to stop at")
    p.add_argument("--col", type=int, required=True, help="index a of the simple reflection")
    p.set_defaults(func=cmd_rjdt)

    p = sub.add_parser("knuth", parents=common, allow_abbrev=False, help="Knuth classes and connectivity")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--class", dest="cls", metavar="BIWORD")
    g.add_argument("--pair", nargs=2, metavar="BIWORD")
    p.add_argument("--max", type=int, default=100_000, help="largest class to explore")
    p.set_defaults(func=cmd_knuth)

    p = sub.add_parser("verify", parents=common, allow_abbrev=False, help="run verification suites")
    p.add_argument("--suite", default="all", help=f"all or one of: {', '.join(SUITES)}")
    p.add_argument("--random", type=int, default=0, help="extra random words (max_k 4, length 6)")
    p.add_argument("--replay", help="rerun the failures stored in a report file")
    p.add_argument("--out", help="write the reports as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=common, allow_abbrev=False, help="draw a grid, growth diagram or pipe dream")
    p.add_argument("--what", choices=["grid", "growth", "pipe-dream"], default="grid")
    p.add_argument("--grid")
    p.add_argument("--biword")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Breach as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 2
    except BREACHES as exc:
        print(f"invariant breach: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
