"""Command-line interface.

Exit codes: 0 on success (and all checks passing), 1 on domain, singularity
or I/O errors and failed checks, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from narspln import harness
from narspln.harness import (
    DEFAULT_K,
    DIMENSIONS,
    PAPER_TOLERANCE,
    PlnVariant,
    RuleKind,
    SweepConfig,
    UsageError,
    check_expected,
    compare_point,
    run_nars,
    run_pln,
    run_sweep,
)
from narspln.reporting import (
    checks_payload,
    eval_payload,
    examples_payload,
    parse_scenario_file,
    render_checks_text,
    render_eval_text,
    render_summary_text,
    write_csv,
    write_json,
)
from narspln.truth import CalculusError, TermProbabilities, TruthValue

EXIT_OK, EXIT_ERROR, EXIT_USAGE = 0, 1, 2


def _floats(text: str, n: int, what: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != n:
        raise argparse.ArgumentTypeError(f"{what} needs {n} comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be numeric, got {text!r}") from None


def _pair(text: str) -> tuple[float, ...]:
    return _floats(text, 2, "truth value")


def _triple(text: str) -> tuple[float, ...]:
    return _floats(text, 3, "terms")


def _pin(text: str) -> tuple[str, float]:
    dim, sep, value = text.partition("=")
    if not sep or dim not in DIMENSIONS:
        raise argparse.ArgumentTypeError(
            f"pin must look like DIM=VALUE with DIM in {','.join(DIMENSIONS)}, got {text!r}"
        )
    try:
        return dim, float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"pin value must be numeric, got {text!r}") from None


def _variant_list(text: str) -> tuple[PlnVariant, ...]:
    out = []
    for name in text.split(","):
        try:
            out.append(PlnVariant(name.strip()))
        except ValueError:
            choices = ", ".join(v.value for v in PlnVariant)
            raise argparse.ArgumentTypeError(f"unknown variant {name!r} (choose from {choices})")
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="narspln", description="Compare NARS and PLN truth-value formulas."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    rules = [r.value for r in RuleKind]

    p = sub.add_parser("eval", help="apply one rule of one calculus to a pair of premises")
    p.add_argument("--system", choices=["nars", "pln"], required=True)
    p.add_argument("--rule", choices=rules, required=True)
    p.add_argument("--variant", choices=[v.value for v in PlnVariant], help="PLN variant")
    p.add_argument("--tv1", type=_pair, required=True, metavar="V,C")
    p.add_argument("--tv2", type=_pair, required=True, metavar="V,C")
    p.add_argument("--k", type=float, default=DEFAULT_K)
    p.add_argument("--terms", type=_triple, metavar="SA,SB,SC")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("examples", help="recompute the three published worked examples")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_examples)

    p = sub.add_parser("sweep", help="compare both calculi over a premise grid")
    p.add_argument("--rule", choices=rules, required=True)
    p.add_argument(
        "--variants",
        type=_variant_list,
        default=(PlnVariant.INDEPENDENCE_SIMPLIFIED,),
        metavar="NAME[,NAME...]",
    )
    p.add_argument("--grid-step", type=float, default=0.05)
    p.add_argument("--k", type=float, default=DEFAULT_K)
    p.add_argument("--pin", type=_pin, action="append", default=[], metavar="DIM=VALUE")
    p.add_argument("--terms", type=_triple, metavar="SA,SB,SC")
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("run", help="evaluate a JSON scenario file")
    p.add_argument("--scenarios", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_run)
    return parser


def _terms(args: argparse.Namespace) -> Optional[TermProbabilities]:
    return None if args.terms is None else TermProbabilities(*args.terms)


def cmd_eval(args: argparse.Namespace) -> int:
    rule = RuleKind(args.rule)
    if args.system == "nars":
        if args.variant is not None or args.terms is not None:
            raise UsageError("--variant and --terms only apply to --system pln")
        variant = None
    else:
        variant = PlnVariant(args.variant or PlnVariant.INDEPENDENCE_SIMPLIFIED.value)
        if variant not in harness.allowed_variants(rule):
            raise UsageError(f"variant {variant.value!r} does not apply to {rule.value}")
        if variant.needs_terms and args.terms is None:
            raise UsageError(f"variant {variant.value!r} requires --terms")
        if args.terms is not None and not variant.needs_terms:
            raise UsageError(f"--terms is only used by full variants, not {variant.value!r}")

    p1, p2 = TruthValue(*args.tv1), TruthValue(*args.tv2)
    terms = _terms(args)
    if variant is None:
        result = run_nars(rule, p1, p2, args.k)
    else:
        result = run_pln(rule, variant, p1, p2, terms)
    payload = eval_payload(args.system, rule, variant, p1, p2, args.k, terms, result)
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(render_eval_text(payload))
    return EXIT_OK


def cmd_examples(args: argparse.Namespace) -> int:
    outcomes = harness.paper_examples()
    rows = examples_payload(outcomes)
    if args.format == "json":
        print(json.dumps(rows, indent=1))
    else:
        print(render_checks_text(rows))
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_ERROR


def cmd_sweep(args: argparse.Namespace) -> int:
    pins = dict(args.pin)
    cfg = SweepConfig(
        rule=RuleKind(args.rule),
        variants=args.variants,
        grid_step=args.grid_step,
        k=args.k,
        pins=pins,
        terms=_terms(args),
    )
    records, summary = run_sweep(cfg)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        if args.format == "csv":
            rows = write_csv(fh, records)
        else:
            rows = write_json(fh, records, summary)
    print(render_summary_text(cfg.rule, summary))
    print(f"wrote {rows} rows to {args.out}")
    return EXIT_OK


def cmd_run(args: argparse.Namespace) -> int:
    try:
        with open(args.scenarios, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.scenarios}: {exc.strerror}", file=sys.stderr)
        return EXIT_ERROR
    scenarios = parse_scenario_file(text)
    rows = []
    for sc in scenarios:
        record = compare_point(sc.rule, sc.premise1, sc.premise2, sc.k, sc.variants, sc.terms)
        checks = check_expected(record, sc.expected, PAPER_TOLERANCE)
        if checks:
            rows += checks_payload(sc.name, checks)
        else:
            # no expectations: report the powers so the run is still informative
            rows += [
                {
                    "example": sc.name,
                    "quantity": name,
                    "computed": harness.quantity(record, name),
                    "expected": None,
                    "passed": True,
                }
                for name in ["nars.power"] + [f"{v.value}.power" for v in sc.variants]
            ]
    if args.format == "json":
        print(json.dumps({"scenarios": len(scenarios), "checks": rows}, indent=1))
    else:
        print(f"{len(scenarios)} scenarios")
        if rows:
            print(_render_run_rows(rows))
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_ERROR


def _render_run_rows(rows: list[dict]) -> str:
    checked = [r for r in rows if r["expected"] is not None]
    lines = []
    if checked:
        lines.append(render_checks_text(checked))
    for r in rows:
        if r["expected"] is None:
            lines.append(f"{r['example']}: {r['quantity']} = {r['computed']:.4f}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CalculusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
