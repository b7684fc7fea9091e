"""Command line interface.

Subcommands:
    figure <1|2|3|4> --out <path> [--steps N] [--pmin F] [--pmax F]
        Write the parameter sweep behind one of the four standard figures
        as CSV (12 significant digits, deterministic bytes).
    eval --state <file> --x <selector> --z <selector>
        Evaluate every bound for one state and print the report as JSON.
    check [--seed N] [--cases N]
        Run the randomized invariant suites and report per-suite pass counts.

Basis selectors: sigma1, sigma2, sigma3, computational, bloch:<theta>:<phi>.
Exit codes: 0 ok, 1 invariant violation, 2 IO error, 3 parse error,
4 validation error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .bounds import evaluate_all, sweep_family
from .checks import SUITE_NAMES, run_checks
from .errors import (
    DimensionError,
    DomainError,
    HermiticityError,
    ParseError,
    ProbabilityError,
    UnsupportedDimension,
    ValidationError,
)
from .measurement import ObservableBasis, bloch_basis, computational_basis, pauli_basis
from .states import load_state_file

EXIT_OK = 0
EXIT_INVARIANT = 1
EXIT_IO = 2
EXIT_PARSE = 3
EXIT_VALIDATION = 4

_VALIDATION_ERRORS = (
    ValidationError,
    DomainError,
    DimensionError,
    HermiticityError,
    ProbabilityError,
    UnsupportedDimension,
)


@dataclass(frozen=True)
class SweepConfig:
    """Grid and column layout of one figure sweep."""

    family: str
    x_selector: str
    z_selector: str
    columns: tuple[str, ...]
    fields: tuple[str, ...]
    steps: int = 101
    p_min: float = 0.0
    p_max: float = 1.0

    def __post_init__(self) -> None:
        if self.steps < 2:
            raise ValidationError(f"steps: need at least 2 grid points, got {self.steps}")
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            raise ValidationError(
                f"grid: need 0 <= pmin <= pmax <= 1, got [{self.p_min}, {self.p_max}]"
            )

    def grid(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.steps)


FIGURES = {
    1: SweepConfig(
        family="xstate",
        x_selector="sigma1",
        z_selector="sigma3",
        columns=("lb_berta_coh", "lb_pati_coh", "lb_adabi_coh"),
        fields=("lb_theorem2", "lb_theorem3", "lb_theorem4"),
    ),
    2: SweepConfig(
        family="bell_diagonal",
        x_selector="sigma1",
        z_selector="sigma3",
        columns=("ub_purity", "ub_holevo", "lhs_coherence"),
        fields=("ub_purity", "ub_holevo", "lhs_coherence"),
    ),
    3: SweepConfig(
        family="bell_diagonal",
        x_selector="sigma1",
        z_selector="sigma2",
        columns=("ub_purity", "ub_holevo", "lhs_coherence"),
        fields=("ub_purity", "ub_holevo", "lhs_coherence"),
    ),
    4: SweepConfig(
        family="werner",
        x_selector="sigma1",
        z_selector="sigma3",
        columns=("lb_coherence", "lb_eur", "cond_entropy"),
        fields=("lb_theorem2", "eur_berta", "cond_entropy"),
    ),
}


def parse_basis(selector: str) -> ObservableBasis:
    """Turn a CLI basis selector into an ObservableBasis."""
    s = selector.strip()
    if s in ("sigma1", "sigma2", "sigma3"):
        return pauli_basis(int(s[-1]))
    if s == "computational":
        return computational_basis(2)
    if s.startswith("bloch:"):
        parts = s.split(":")
        if len(parts) != 3:
            raise ParseError(f"bloch selector needs 'bloch:<theta>:<phi>', got {selector!r}")
        try:
            theta, phi = float(parts[1]), float(parts[2])
        except ValueError:
            raise ParseError(f"bloch angles must be numbers, got {selector!r}") from None
        if not (math.isfinite(theta) and math.isfinite(phi)):
            raise ParseError(f"bloch angles must be finite, got {selector!r}")
        return bloch_basis(theta, phi)
    raise ParseError(
        f"unknown basis selector {selector!r}; expected sigma1, sigma2, sigma3, "
        "computational, or bloch:<theta>:<phi>"
    )


def format_value(value: float) -> str:
    """Render a finite float with 12 significant digits."""
    if not math.isfinite(value):
        raise ValidationError(f"non-finite value {value!r} in output")
    return f"{value:.12g}"


def render_figure_csv(config: SweepConfig) -> str:
    x = parse_basis(config.x_selector)
    z = parse_basis(config.z_selector)
    rows = sweep_family(config.family, x, z, config.grid())
    lines = ["p," + ",".join(config.columns)]
    for p, report in rows:
        values = report.as_dict()
        lines.append(
            ",".join([format_value(p)] + [format_value(values[f]) for f in config.fields])
        )
    return "\n".join(lines) + "\n"


def cmd_figure(args: argparse.Namespace) -> int:
    base = FIGURES[args.which]
    try:
        config = SweepConfig(
            family=base.family,
            x_selector=base.x_selector,
            z_selector=base.z_selector,
            columns=base.columns,
            fields=base.fields,
            steps=args.steps,
            p_min=args.pmin,
            p_max=args.pmax,
        )
        text = render_figure_csv(config)
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        x = parse_basis(args.x)
        z = parse_basis(args.z)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        rho = load_state_file(args.state)
    except OSError as exc:
        print(f"error: cannot read {args.state}: {exc}", file=sys.stderr)
        return EXIT_IO
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        report = evaluate_all(rho, x, z)
        payload = {key: float(format_value(val)) for key, val in report.as_dict().items()}
    except _VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    print(json.dumps(payload, indent=2))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    result = run_checks(args.seed, args.cases, corrupt=args.corrupt)
    for suite in result.suites:
        print(f"{suite.name:<14} {suite.passed}/{suite.total} passed")
    if result.ok:
        print(f"ok: all {len(result.suites)} suites passed on {result.cases} cases (seed {result.seed})")
        return EXIT_OK
    shown = 0
    for suite in result.suites:
        for violation in suite.violations:
            if shown >= 10:
                break
            print(f"VIOLATION [{suite.name}] {violation.describe()}", file=sys.stderr)
            shown += 1
    total_bad = sum(len(s.violations) for s in result.suites)
    print(f"error: {total_bad} case-level violations (seed {result.seed})", file=sys.stderr)
    return EXIT_INVARIANT


class CliParser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the parse-error code."""

    def error(self, message: str):  # noqa: D102 (argparse override)
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def build_parser() -> CliParser:
    parser = CliParser(prog="coherence-bounds", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figure", help="write one figure sweep as CSV")
    fig.add_argument("which", type=int, choices=sorted(FIGURES))
    fig.add_argument("--out", required=True, help="output CSV path")
    fig.add_argument("--steps", type=int, default=101, help="grid points (default 101)")
    fig.add_argument("--pmin", type=float, default=0.0, help="grid start (default 0)")
    fig.add_argument("--pmax", type=float, default=1.0, help="grid end (default 1)")
    fig.set_defaults(func=cmd_figure)

    ev = sub.add_parser("eval", help="evaluate all bounds for a state file")
    ev.add_argument("--state", required=True, help="state file path")
    ev.add_argument("--x", required=True, help="X basis selector")
    ev.add_argument("--z", required=True, help="Z basis selector")
    ev.set_defaults(func=cmd_eval)

    chk = sub.add_parser("check", help="run randomized invariant suites")
    chk.add_argument("--seed", type=int, default=42)
    chk.add_argument("--cases", type=int, default=100)
    chk.add_argument("--corrupt", choices=SUITE_NAMES, help=argparse.SUPPRESS)
    chk.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
