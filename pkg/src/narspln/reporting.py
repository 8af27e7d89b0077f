"""Serialization of results: CSV/JSON rows, text rendering, scenario files.

JSON and CSV carry full double precision (``repr`` of the float); only the
text renderers round, to four decimals.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping, Optional

from narspln.harness import (
    DEFAULT_K,
    Check,
    ComparisonRecord,
    ExampleOutcome,
    PlnVariant,
    RuleKind,
    SweepSummary,
    UsageError,
    allowed_variants,
)
from narspln.truth import InferenceResult, TermProbabilities, TruthValue

CSV_HEADER = (
    "rule",
    "variant",
    "f1",
    "c1",
    "f2",
    "c2",
    "k",
    "s_a",
    "s_b",
    "s_c",
    "pln_value",
    "pln_confidence",
    "pln_power",
    "nars_value",
    "nars_confidence",
    "nars_power",
    "power_delta",
    "clamped",
    "degenerate",
)


def record_rows(record: ComparisonRecord) -> list[dict[str, Any]]:
    """One flat row per PLN variant, keyed by :data:`CSV_HEADER`."""
    t = record.terms
    n = record.nars
    rows = []
    for variant, r in record.pln.items():
        rows.append(
            {
                "rule": record.rule.value,
                "variant": variant.value,
                "f1": record.premise1.value,
                "c1": record.premise1.confidence,
                "f2": record.premise2.value,
                "c2": record.premise2.confidence,
                "k": record.k,
                "s_a": None if t is None else t.s_a,
                "s_b": None if t is None else t.s_b,
                "s_c": None if t is None else t.s_c,
                "pln_value": r.truth.value,
                "pln_confidence": r.truth.confidence,
                "pln_power": r.power,
                "nars_value": n.truth.value,
                "nars_confidence": n.truth.confidence,
                "nars_power": n.power,
                "power_delta": record.power_delta[variant],
                "clamped": r.clamped,
                "degenerate": r.degenerate or n.degenerate,
            }
        )
    return rows


def _csv_cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(stream: io.TextIOBase, records: Iterable[ComparisonRecord]) -> int:
    """Write header plus one line per (record, variant); returns the row count."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    count = 0
    for record in records:
        for row in record_rows(record):
            writer.writerow([_csv_cell(row[h]) for h in CSV_HEADER])
            count += 1
    return count


def write_json(
    stream: io.TextIOBase,
    records: Iterable[ComparisonRecord],
    summary: Optional[SweepSummary] = None,
) -> int:
    rows = [row for record in records for row in record_rows(record)]
    doc: dict[str, Any] = {"rows": rows}
    if summary is not None:
        doc["summary"] = summary.to_dict()
    json.dump(doc, stream, indent=1)
    stream.write("\n")
    return len(rows)


def _fmt(x: Optional[float]) -> str:
    return "-" if x is None else f"{x:.4f}"


def _flag(b: bool) -> str:
    return "true" if b else "false"


# --------------------------------------------------------------------------
# eval
# --------------------------------------------------------------------------


def eval_payload(
    system: str,
    rule: RuleKind,
    variant: Optional[PlnVariant],
    p1: TruthValue,
    p2: TruthValue,
    k: float,
    terms: Optional[TermProbabilities],
    result: InferenceResult,
) -> dict[str, Any]:
    return {
        "system": system,
        "rule": rule.value,
        "variant": None if variant is None else variant.value,
        "f1": p1.value,
        "c1": p1.confidence,
        "f2": p2.value,
        "c2": p2.confidence,
        "k": k,
        "s_a": None if terms is None else terms.s_a,
        "s_b": None if terms is None else terms.s_b,
        "s_c": None if terms is None else terms.s_c,
        "value": result.truth.value,
        "confidence": result.truth.confidence,
        "power": result.power,
        "clamped": result.clamped,
        "degenerate": result.degenerate,
    }


def render_eval_text(payload: Mapping[str, Any]) -> str:
    """Human-readable form of :func:`eval_payload` output (which stays the source of truth)."""
    title = f"{payload['system']} {payload['rule']}"
    if payload["variant"]:
        title += f" [{payload['variant']}]"
    lines = [
        title,
        f"  premises   ({_fmt(payload['f1'])}, {_fmt(payload['c1'])})"
        f"  ({_fmt(payload['f2'])}, {_fmt(payload['c2'])})  k={payload['k']:g}",
    ]
    if payload["s_a"] is not None:
        lines.append(
            f"  terms      s_a={_fmt(payload['s_a'])} s_b={_fmt(payload['s_b'])}"
            f" s_c={_fmt(payload['s_c'])}"
        )
    lines += [
        f"  value      {_fmt(payload['value'])}",
        f"  confidence {_fmt(payload['confidence'])}",
        f"  power      {_fmt(payload['power'])}",
        f"  clamped    {_flag(payload['clamped'])}",
        f"  degenerate {_flag(payload['degenerate'])}",
    ]
    return "\n".join(lines)


# --------------------------------------------------------------------------
# example / scenario checks
# --------------------------------------------------------------------------


def checks_payload(title: str, checks: Iterable[Check]) -> list[dict[str, Any]]:
    return [
        {
            "example": title,
            "quantity": c.name,
            "computed": c.computed,
            "expected": c.expected,
            "passed": c.passed,
        }
        for c in checks
    ]


def examples_payload(outcomes: Iterable[ExampleOutcome]) -> list[dict[str, Any]]:
    out: list[dict[str, Any]] = []
    for o in outcomes:
        out += checks_payload(o.title, o.checks)
    return out


def render_checks_text(rows: list[Mapping[str, Any]]) -> str:
    width = max([len("quantity")] + [len(r["quantity"]) for r in rows])
    lines = []
    current = None
    for r in rows:
        if r["example"] != current:
            current = r["example"]
            lines.append(current)
            lines.append(f"  {'quantity':<{width}}  computed  expected  status")
        status = "PASS" if r["passed"] else "FAIL"
        lines.append(
            f"  {r['quantity']:<{width}}  {r['computed']:8.4f}  {r['expected']:8.4f}  {status}"
        )
    failed = sum(not r["passed"] for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    return "\n".join(lines)


def render_summary_text(cfg_rule: RuleKind, summary: SweepSummary) -> str:
    lines = [
        f"rule={cfg_rule.value} points={summary.count} evaluated={summary.evaluated}"
        f" skipped={summary.skipped}"
    ]
    for v in summary.mean_abs_power_delta:
        point = summary.argmax_point[v]
        where = "-" if point is None else ",".join(repr(x) for x in point)
        lines.append(
            f"{v.value}: mean_abs_power_delta={summary.mean_abs_power_delta[v]!r}"
            f" max_abs_power_delta={summary.max_abs_power_delta[v]!r} argmax(f1,c1,f2,c2)={where}"
        )
    return "\n".join(lines)


# --------------------------------------------------------------------------
# scenario files
# --------------------------------------------------------------------------


class ScenarioError(UsageError):
    """A scenario file entry failed validation; the message names the field."""


_SCENARIO_KEYS = {"name", "rule", "premise1", "premise2", "k", "variants", "terms", "expected"}
_QUANTITY_FIELDS = ("value", "confidence", "power")


@dataclass(frozen=True)
class Scenario:
    name: str
    rule: RuleKind
    premise1: TruthValue
    premise2: TruthValue
    variants: tuple[PlnVariant, ...]
    k: float = DEFAULT_K
    terms: Optional[TermProbabilities] = None
    expected: Mapping[str, float] = field(default_factory=dict)


def _number(where: str, x: Any) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
        raise ScenarioError(f"{where}: expected a finite number, got {x!r}")
    return float(x)


def _unit(where: str, x: Any) -> float:
    v = _number(where, x)
    if not 0.0 <= v <= 1.0:
        raise ScenarioError(f"{where}: must lie in [0, 1], got {v!r}")
    return v


def _object(where: str, x: Any, keys: tuple[str, ...]) -> dict[str, Any]:
    if not isinstance(x, dict):
        raise ScenarioError(f"{where}: expected an object, got {type(x).__name__}")
    missing = [k for k in keys if k not in x]
    if missing:
        raise ScenarioError(f"{where}.{missing[0]}: missing")
    extra = sorted(set(x) - set(keys))
    if extra:
        raise ScenarioError(f"{where}.{extra[0]}: unknown field")
    return x


def _premise(where: str, x: Any) -> TruthValue:
    obj = _object(where, x, ("value", "confidence"))
    return TruthValue(
        _unit(f"{where}.value", obj["value"]), _unit(f"{where}.confidence", obj["confidence"])
    )


def quantity_names(variants: Iterable[PlnVariant]) -> set[str]:
    names = {f"nars.{f}" for f in _QUANTITY_FIELDS}
    for v in variants:
        names |= {f"{v.value}.{f}" for f in _QUANTITY_FIELDS + ("power_delta",)}
    return names


def parse_scenario(index: int, entry: Any) -> Scenario:
    where = f"scenarios[{index}]"
    if not isinstance(entry, dict):
        raise ScenarioError(f"{where}: expected an object, got {type(entry).__name__}")
    for key in ("rule", "premise1", "premise2", "variants"):
        if key not in entry:
            raise ScenarioError(f"{where}.{key}: missing")
    extra = sorted(set(entry) - _SCENARIO_KEYS)
    if extra:
        raise ScenarioError(f"{where}.{extra[0]}: unknown field")

    try:
        rule = RuleKind(entry["rule"])
    except ValueError:
        choices = ", ".join(r.value for r in RuleKind)
        raise ScenarioError(f"{where}.rule: expected one of {choices}, got {entry['rule']!r}")

    p1 = _premise(f"{where}.premise1", entry["premise1"])
    p2 = _premise(f"{where}.premise2", entry["premise2"])

    k = DEFAULT_K
    if "k" in entry:
        k = _number(f"{where}.k", entry["k"])
        if k <= 0:
            raise ScenarioError(f"{where}.k: must be positive, got {k!r}")

    raw_variants = entry["variants"]
    if not isinstance(raw_variants, list) or not raw_variants:
        raise ScenarioError(f"{where}.variants: expected a non-empty list of variant names")
    variants = []
    for i, name in enumerate(raw_variants):
        try:
            v = PlnVariant(name)
        except ValueError:
            raise ScenarioError(f"{where}.variants[{i}]: unknown variant {name!r}") from None
        if v not in allowed_variants(rule):
            raise ScenarioError(
                f"{where}.variants[{i}]: {name!r} does not apply to {rule.value}"
            )
        variants.append(v)

    terms = None
    if entry.get("terms") is not None:
        obj = _object(f"{where}.terms", entry["terms"], ("s_a", "s_b", "s_c"))
        terms = TermProbabilities(
            *(_unit(f"{where}.terms.{key}", obj[key]) for key in ("s_a", "s_b", "s_c"))
        )
    needs_terms = any(v.needs_terms for v in variants)
    if needs_terms and terms is None:
        raise ScenarioError(f"{where}.terms: required by full variants")
    if terms is not None and not needs_terms:
        raise ScenarioError(f"{where}.terms: given but no full variant requested")

    expected: dict[str, float] = {}
    if "expected" in entry:
        if not isinstance(entry["expected"], dict):
            raise ScenarioError(f"{where}.expected: expected an object")
        valid = quantity_names(variants)
        for name, value in entry["expected"].items():
            if name not in valid:
                raise ScenarioError(f"{where}.expected.{name}: unknown quantity")
            expected[name] = _number(f"{where}.expected.{name}", value)

    label = entry.get("name", f"scenario {index}")
    if not isinstance(label, str):
        raise ScenarioError(f"{where}.name: expected a string")
    return Scenario(label, rule, p1, p2, tuple(variants), k, terms, expected)


def parse_scenario_file(text: str) -> list[Scenario]:
    """Parse a ``{"scenarios": [...]}`` JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "scenarios" not in doc:
        raise ScenarioError('top level: expected an object with a "scenarios" array')
    if not isinstance(doc["scenarios"], list):
        raise ScenarioError("scenarios: expected an array")
    return [parse_scenario(i, e) for i, e in enumerate(doc["scenarios"])]
