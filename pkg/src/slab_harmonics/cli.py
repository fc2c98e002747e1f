"""Command-line front end.

Commands:
    solve-slab      solve a slab Dirichlet problem from a JSON file
    solve-diffeq    solve the difference equation for a harmonic g
    verify          re-check a stored solution against its problem
    oracle-compare  compare the general solver against the Bernoulli route (d=1)
    eval            sample a polynomial on a float grid, CSV output
    self-test       seeded randomized identity checks (SLAB_HARMONICS_SEED)

Exit codes: 0 all checks pass, 1 verification failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import diffeq as de
from . import slab as sl
from .complex_oracle import oracle_compare
from .poly import MultiPoly
from .randgen import random_harmonic_poly, random_tfree_poly
from .report import VerificationReport


class InputError(Exception):
    """Malformed or invalid input file; maps to exit code 2."""


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}: top-level JSON value must be an object")
    return obj


def _write_json(path: str | None, obj: dict, quiet: bool) -> None:
    text = json.dumps(obj, indent=2)
    if path:
        Path(path).write_text(text + "\n", encoding="utf-8")
    elif not quiet:
        print(text)


def _report_exit(report: VerificationReport, quiet: bool) -> int:
    if report.passed:
        if not quiet:
            print(f"{report.name}: pass")
        return 0
    print(f"{report.name}: {report.status}", file=sys.stderr)
    for key, residual in report.nonzero_residuals().items():
        print(f"  residual {key}: {residual}", file=sys.stderr)
    return 1


def cmd_solve_slab(args) -> int:
    try:
        prob = sl.SlabProblem.from_json_dict(_load_json(args.input))
    except (InputError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    h = sl.solve_slab(prob)
    report = sl.verify_boundary(h, prob)
    _write_json(
        args.output,
        {"solution": h.to_json_dict(), "report": report.to_json_dict()},
        args.quiet,
    )
    return _report_exit(report, args.quiet)


def cmd_solve_diffeq(args) -> int:
    try:
        prob = de.DiffEqProblem.from_json_dict(_load_json(args.input))
    except (InputError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sol = de.solve(prob)
    report = de.verify_difference(sol.h, prob.g)
    out = sol.to_json_dict()
    out["report"] = report.to_json_dict()
    _write_json(args.output, out, args.quiet)
    return _report_exit(report, args.quiet)


def cmd_verify(args) -> int:
    try:
        obj = _load_json(args.input)
        kind = obj["kind"]
        h = MultiPoly.from_json_dict(obj["h"])
        if kind == "slab":
            prob = sl.SlabProblem.from_json_dict(obj["problem"])
            report = sl.verify_boundary(h, prob)
        elif kind == "diffeq":
            prob = de.DiffEqProblem.from_json_dict(obj["problem"])
            report = de.verify_difference(h, prob.g)
        else:
            raise InputError(f"unknown problem kind {kind!r}")
    except (InputError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        _write_json(args.output, report.to_json_dict(), args.quiet)
    return _report_exit(report, args.quiet)


def cmd_oracle_compare(args) -> int:
    try:
        prob = de.DiffEqProblem.from_json_dict(_load_json(args.input))
        if prob.d != 1:
            raise InputError("oracle-compare requires d = 1")
    except (InputError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sol = de.solve(prob)
    report = oracle_compare(prob.g, sol.h)
    _write_json(
        args.output,
        {"solution": sol.h.to_json_dict(), "report": report.to_json_dict()},
        args.quiet,
    )
    if report.passed and not args.quiet:
        print(f"r(y) = {report.extras['r']}")
    return _report_exit(report, args.quiet)


def _parse_grid(spec: str, d: int) -> list[list[float]]:
    """Parse "t=lo:hi:step,y1=lo:hi:step,..." into per-variable sample lists."""
    names = ["t"] + [f"y{j}" for j in range(1, d + 1)]
    axes: dict[str, list[float]] = {}
    for part in spec.split(","):
        try:
            name, rng = part.split("=")
            lo, hi, step = (float(v) for v in rng.split(":"))
        except ValueError as exc:
            raise InputError(f"malformed grid component {part!r}") from exc
        if step <= 0:
            raise InputError(f"grid step must be positive in {part!r}")
        if not (lo <= hi) or any(x != x or abs(x) == float("inf") for x in (lo, hi)):
            raise InputError(f"empty or non-finite grid range in {part!r}")
        if name not in names:
            raise InputError(f"unknown grid variable {name!r} (expected {names})")
        values = []
        x = lo
        while x <= hi + step * 1e-9:
            values.append(x)
            x += step
        axes[name] = values
    missing = [n for n in names if n not in axes]
    if missing:
        raise InputError(f"grid is missing variables: {missing}")
    return [axes[n] for n in names]


def cmd_eval(args) -> int:
    try:
        p = MultiPoly.from_json_dict(_load_json(args.input))
        axes = _parse_grid(args.grid, p.d)
    except (InputError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    names = ["t"] + [f"y{j}" for j in range(1, p.d + 1)]
    lines = [",".join(names + ["value"])]

    def walk(prefix: list[float], remaining: list[list[float]]) -> None:
        if not remaining:
            value = p.eval_float(prefix)
            lines.append(",".join(f"{v:.17g}" for v in prefix + [value]))
            return
        for x in remaining[0]:
            walk(prefix + [x], remaining[1:])

    walk([], axes)
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    elif not args.quiet:
        sys.stdout.write(text)
    return 0


def cmd_self_test(args) -> int:
    seed = os.environ.get("SLAB_HARMONICS_SEED", "0")
    rng = random.Random(int(seed))
    failures = 0
    rounds = args.rounds
    for i in range(rounds):
        d = rng.randint(1, 3)
        f0 = random_tfree_poly(rng, d, 6)
        f1 = random_tfree_poly(rng, d, 6)
        prob = sl.SlabProblem(Fraction(0), Fraction(1), d, f0, f1)
        if not sl.verify_boundary(sl.solve_slab(prob), prob).passed:
            failures += 1
            print(f"self-test slab round {i}: FAIL", file=sys.stderr)
        g = random_harmonic_poly(rng, d, 6)
        if not de.verify_difference(de.solve(de.DiffEqProblem(g, d)).h, g).passed:
            failures += 1
            print(f"self-test diffeq round {i}: FAIL", file=sys.stderr)
    if not args.quiet:
        print(f"self-test: {2 * rounds - failures}/{2 * rounds} checks passed (seed={seed})")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slab-harmonics",
        description="Exact slab Dirichlet and harmonic difference-equation solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, needs_input=True, needs_grid=False):
        sp = sub.add_parser(name)
        if needs_input:
            sp.add_argument("--input", required=True, help="input JSON file")
        sp.add_argument("--output", help="output file (default: stdout)")
        if needs_grid:
            sp.add_argument(
                "--grid",
                required=True,
                help='sampling grid, e.g. "t=0:1:0.5,y1=-1:1:0.5"',
            )
        sp.add_argument("--quiet", action="store_true")
        sp.set_defaults(func=func)
        return sp

    add("solve-slab", cmd_solve_slab)
    add("solve-diffeq", cmd_solve_diffeq)
    add("verify", cmd_verify)
    add("oracle-compare", cmd_oracle_compare)
    add("eval", cmd_eval, needs_grid=True)
    st = add("self-test", cmd_self_test, needs_input=False)
    st.add_argument("--rounds", type=int, default=20)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
