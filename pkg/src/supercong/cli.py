"""Command line front end: run claims or batches and emit report streams.

Exit code 0 when every non-skipped, non-informational claim passes, 1 when
any fails, 2 on usage errors (bad flags, malformed rationals, violated
operation contracts). Hypothesis violations are skipped reports and leave
the exit code untouched.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .congruence_suite import (
    DEFAULT_SEED,
    Family,
    LemmaCheck,
    VerificationReport,
    canonical_sort,
    probe_conjecture_7_1,
    reproduce_table_1,
    run_lemma_batch,
    run_telescope_fuzz,
    run_theorem_batch,
    run_wz_fuzz,
    theorem_grid,
    verify_corollary,
    verify_family,
    verify_lemma,
    verify_theorem,
)
from .dwork import DashParams
from .exact_core import INFINITE

PARALLEL_ENV = "SUPERCONG_PARALLEL"
FORMATS = ("json", "tsv", "text")


@dataclass(frozen=True)
class RunConfig:
    """A fully resolved invocation: subcommand, claim arguments and knobs."""

    subcommand: str
    claim_args: tuple[tuple[str, object], ...] = ()
    output_format: str = "json"
    parallelism: int = 1
    force: bool = False
    seed: int = DEFAULT_SEED
    p_min: int = 5
    p_max: int = 2_000
    r_values: tuple[int, ...] = (1, 2)
    include_timings: bool = False

    def __post_init__(self) -> None:
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")
        if not self.r_values or any(r < 1 for r in self.r_values):
            raise ValueError("r values must be positive and nonempty")
        if self.p_min > self.p_max:
            raise ValueError("empty prime range")


def _format_valuation(value) -> str:
    return "inf" if value is INFINITE else str(value)


def _params_text(rep: VerificationReport) -> str:
    return ",".join(f"{key}={value}" for key, value in rep.params)


def _json_lines(reports: list[VerificationReport], include_timings: bool) -> str:
    lines = []
    for rep in reports:
        obj: dict[str, object] = {"claim": rep.claim, "params": dict(rep.params)}
        if rep.skipped_reason is not None:
            obj["skipped_reason"] = rep.skipped_reason
        else:
            obj["required_exponent"] = rep.required_exponent
            obj["observed_valuation"] = (
                "inf" if rep.observed_valuation is INFINITE else rep.observed_valuation
            )
            if rep.informational:
                obj["informational"] = True
            else:
                obj["pass"] = rep.passed
        if include_timings:
            obj["elapsed_ms"] = round(rep.elapsed_ms, 3)
        lines.append(json.dumps(obj, sort_keys=True))
    return "\n".join(lines) + "\n"


def _tsv_lines(reports: list[VerificationReport], include_timings: bool) -> str:
    columns = [
        "claim",
        "params",
        "required_exponent",
        "observed_valuation",
        "pass",
        "skipped_reason",
        "informational",
    ]
    if include_timings:
        columns.append("elapsed_ms")
    rows = ["\t".join(columns)]
    for rep in reports:
        cells = [
            rep.claim,
            _params_text(rep),
            "-" if rep.required_exponent is None else str(rep.required_exponent),
            "-" if rep.observed_valuation is None else _format_valuation(rep.observed_valuation),
            "-" if rep.passed is None else ("true" if rep.passed else "false"),
            rep.skipped_reason or "-",
            "true" if rep.informational else "-",
        ]
        if include_timings:
            cells.append(f"{rep.elapsed_ms:.3f}")
        rows.append("\t".join(cells))
    return "\n".join(rows) + "\n"


def _text_lines(reports: list[VerificationReport], include_timings: bool) -> str:
    lines = []
    tallies = {"passed": 0, "failed": 0, "skipped": 0, "informational": 0}
    for rep in reports:
        suffix = f" [{rep.elapsed_ms:.1f} ms]" if include_timings else ""
        where = f"{rep.claim} ({_params_text(rep)})"
        if rep.skipped_reason is not None:
            tallies["skipped"] += 1
            lines.append(f"SKIP {where}: {rep.skipped_reason}{suffix}")
        elif rep.informational:
            tallies["informational"] += 1
            lines.append(
                f"INFO {where}: observed v={_format_valuation(rep.observed_valuation)}"
                f" against target {rep.required_exponent}{suffix}"
            )
        elif rep.passed:
            tallies["passed"] += 1
            lines.append(
                f"PASS {where}: v={_format_valuation(rep.observed_valuation)}"
                f" >= {rep.required_exponent}{suffix}"
            )
        else:
            tallies["failed"] += 1
            lines.append(
                f"FAIL {where}: v={_format_valuation(rep.observed_valuation)}"
                f" < {rep.required_exponent}{suffix}"
            )
    summary = ", ".join(f"{count} {label}" for label, count in tallies.items())
    return "\n".join(lines) + "\n" + summary + "\n"


def emit_report(
    reports: list[VerificationReport],
    output_format: str = "json",
    include_timings: bool = False,
) -> bytes:
    """Render reports as a byte stream in canonical order.

    JSON is one object per line; absent fields are omitted, and an infinite
    observation serializes as the string "inf". TSV mirrors the same columns
    with "-" for absent values. Timings are included only on request so that
    identical runs emit identical bytes.
    """
    if not reports:
        raise ValueError("no reports to emit")
    reports = canonical_sort(reports)
    if output_format == "json":
        text = _json_lines(reports, include_timings)
    elif output_format == "tsv":
        text = _tsv_lines(reports, include_timings)
    elif output_format == "text":
        text = _text_lines(reports, include_timings)
    else:
        raise ValueError(f"unknown format {output_format!r}")
    return text.encode()


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _r_values(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(token) for token in text.split(",") if token.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("r values must be nonempty")
    return values


def _add_dash_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--c", type=int, required=True, help="numerator of alpha = c/d")
    parser.add_argument("--d", type=int, required=True, help="denominator of alpha = c/d")
    parser.add_argument("--s", type=int, required=True, help="residue class of p mod d")


def _add_p_r(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--p", type=int, required=True, help="prime")
    parser.add_argument("--r", type=int, required=True, help="power of p")


def _build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=FORMATS, default="json", help="report format")
    output.add_argument(
        "--timings", action="store_true", help="include elapsed milliseconds in reports"
    )
    forceable = argparse.ArgumentParser(add_help=False)
    forceable.add_argument(
        "--force", action="store_true", help="override the desk-scale resource guard"
    )

    parser = argparse.ArgumentParser(
        prog="supercong",
        description="Verify truncated hypergeometric supercongruences exactly.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="verify a single claim")
    targets = verify.add_subparsers(dest="target", required=True)

    theorem = targets.add_parser("theorem", parents=[output, forceable])
    _add_dash_params(theorem)
    _add_p_r(theorem)

    corollary = targets.add_parser("corollary", parents=[output, forceable])
    _add_p_r(corollary)

    family = targets.add_parser("family", parents=[output, forceable])
    family.add_argument("--name", choices=[fam.value for fam in Family], required=True)
    _add_p_r(family)
    family.add_argument("--alpha", type=_rational, default=None, help="rational, e.g. 2/3")

    lemma = targets.add_parser("lemma", parents=[output, forceable])
    lemma.add_argument("--name", choices=[check.value for check in LemmaCheck], required=True)
    _add_dash_params(lemma)
    _add_p_r(lemma)

    commands.add_parser("table1", parents=[output])

    fuzz = commands.add_parser("wz-fuzz", parents=[output])
    fuzz.add_argument("--count", type=int, default=200, help="pair-identity cases")
    fuzz.add_argument("--telescope-count", type=int, default=50, help="telescoping cases")
    fuzz.add_argument("--seed", type=int, default=DEFAULT_SEED)

    probe = commands.add_parser("probe", parents=[output, forceable])
    _add_p_r(probe)

    batch = commands.add_parser("batch", parents=[output, forceable])
    batch.add_argument("--parallel", type=int, default=None, help="worker processes")
    batch.add_argument("--lemmas", action="store_true", help="include the lemma checks")
    batch.add_argument("--count", type=int, default=2, help="admissible primes per row")
    batch.add_argument("--r-values", type=_r_values, default=(1, 2))
    batch.add_argument("--p-min", type=int, default=5)
    batch.add_argument("--p-max", type=int, default=2_000)

    return parser


def _resolve_parallelism(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(PARALLEL_ENV)
    if env is None:
        return 1
    try:
        return int(env)
    except ValueError as exc:
        raise ValueError(f"{PARALLEL_ENV} must be an integer, got {env!r}") from exc


def _execute(args: argparse.Namespace) -> tuple[RunConfig, list[VerificationReport]]:
    command = args.command
    if command == "verify":
        command = f"verify-{args.target}"
        if args.target == "theorem":
            config = RunConfig(
                command,
                (("c", args.c), ("d", args.d), ("s", args.s), ("p", args.p), ("r", args.r)),
                args.format,
                force=args.force,
                include_timings=args.timings,
            )
            params = DashParams(args.c, args.d, args.s)
            return config, [verify_theorem(params, args.p, args.r, force=args.force)]
        if args.target == "corollary":
            config = RunConfig(
                command,
                (("p", args.p), ("r", args.r)),
                args.format,
                force=args.force,
                include_timings=args.timings,
            )
            return config, [verify_corollary(args.p, args.r, force=args.force)]
        if args.target == "family":
            claim_args = (("name", args.name), ("p", args.p), ("r", args.r))
            if args.alpha is not None:
                claim_args += (("alpha", str(args.alpha)),)
            config = RunConfig(
                command, claim_args, args.format, force=args.force, include_timings=args.timings
            )
            report = verify_family(args.name, args.p, args.r, args.alpha, force=args.force)
            return config, [report]
        config = RunConfig(
            command,
            (("name", args.name), ("c", args.c), ("d", args.d), ("s", args.s),
             ("p", args.p), ("r", args.r)),
            args.format,
            force=args.force,
            include_timings=args.timings,
        )
        params = DashParams(args.c, args.d, args.s)
        return config, [verify_lemma(args.name, params, args.p, args.r, force=args.force)]

    if command == "table1":
        config = RunConfig(command, (), args.format, include_timings=args.timings)
        return config, reproduce_table_1()

    if command == "wz-fuzz":
        config = RunConfig(
            command,
            (("count", args.count), ("telescope_count", args.telescope_count)),
            args.format,
            seed=args.seed,
            include_timings=args.timings,
        )
        reports = run_wz_fuzz(args.count, args.seed)
        reports += run_telescope_fuzz(args.telescope_count, args.seed)
        return config, canonical_sort(reports)

    if command == "probe":
        config = RunConfig(
            command,
            (("p", args.p), ("r", args.r)),
            args.format,
            force=args.force,
            include_timings=args.timings,
        )
        return config, [probe_conjecture_7_1(args.p, args.r, force=args.force)]

    # batch
    config = RunConfig(
        command,
        (("count", args.count), ("lemmas", args.lemmas)),
        args.format,
        parallelism=_resolve_parallelism(args.parallel),
        force=args.force,
        p_min=args.p_min,
        p_max=args.p_max,
        r_values=tuple(args.r_values),
        include_timings=args.timings,
    )
    tasks = theorem_grid(
        r_values=config.r_values, count=args.count, p_min=config.p_min, p_max=config.p_max
    )
    reports = run_theorem_batch(tasks, config.parallelism, force=config.force)
    if args.lemmas:
        reports += run_lemma_batch(tasks, config.parallelism, force=config.force)
    return config, canonical_sort(reports)


def run(argv: list[str] | None = None) -> int:
    """Parse argv, run the mapped operations, write one report per claim."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        config, reports = _execute(args)
        stream = emit_report(reports, config.output_format, config.include_timings)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.buffer.write(stream)
    sys.stdout.buffer.flush()
    return 1 if any(rep.passed is False for rep in reports) else 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
