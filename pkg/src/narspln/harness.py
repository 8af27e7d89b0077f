"""Pointwise and grid-wide comparison of PLN and NARS conclusion power.

The quantity compared is ``power = value * confidence`` of the conclusion.
Deltas are always PLN minus NARS.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from narspln import nars, pln
from narspln.truth import (
    InferenceResult,
    SingularityError,
    TermProbabilities,
    TruthValue,
    check_k,
)

DEFAULT_K = nars.DEFAULT_K
#: half a unit in the fourth decimal place, the precision of the published figures
PAPER_TOLERANCE = 5e-4

DIMENSIONS = ("f1", "c1", "f2", "c2")


class UsageError(ValueError):
    """Invalid combination of rule, variants, terms or grid settings."""


class RuleKind(enum.Enum):
    DEDUCTION = "deduction"
    INDUCTION = "induction"
    ABDUCTION = "abduction"


class PlnVariant(enum.Enum):
    INDEPENDENCE_SIMPLIFIED = "independence-simplified"
    GEOMETRY_EXACT = "geometry-exact"
    GEOMETRY_PAPER_SIMPLIFIED = "geometry-paper-simplified"
    INDEPENDENCE_FULL = "independence-full"
    INDUCTION_FULL = "induction-full"
    ABDUCTION_FULL = "abduction-full"

    @property
    def needs_terms(self) -> bool:
        return self in _FULL_VARIANTS


_FULL_VARIANTS = frozenset(
    {PlnVariant.INDEPENDENCE_FULL, PlnVariant.INDUCTION_FULL, PlnVariant.ABDUCTION_FULL}
)

_PlnRule = Callable[[TruthValue, TruthValue, Optional[TermProbabilities]], InferenceResult]

_PLN_RULES: dict[RuleKind, dict[PlnVariant, _PlnRule]] = {
    RuleKind.DEDUCTION: {
        PlnVariant.INDEPENDENCE_SIMPLIFIED: lambda a, b, t: pln.pln_deduction_simplified(a, b),
        PlnVariant.GEOMETRY_EXACT: lambda a, b, t: pln.pln_deduction_geometry(
            a, b, pln.GeometryMode.EXACT
        ),
        PlnVariant.GEOMETRY_PAPER_SIMPLIFIED: lambda a, b, t: pln.pln_deduction_geometry(
            a, b, pln.GeometryMode.PAPER_SIMPLIFIED
        ),
        PlnVariant.INDEPENDENCE_FULL: pln.pln_deduction_independence,
    },
    RuleKind.INDUCTION: {
        PlnVariant.INDEPENDENCE_SIMPLIFIED: lambda a, b, t: pln.pln_induction_simplified(a, b),
        PlnVariant.INDUCTION_FULL: pln.pln_induction_full,
    },
    RuleKind.ABDUCTION: {
        PlnVariant.INDEPENDENCE_SIMPLIFIED: lambda a, b, t: pln.pln_abduction_simplified(a, b),
        PlnVariant.ABDUCTION_FULL: pln.pln_abduction_full,
    },
}


def allowed_variants(rule: RuleKind) -> tuple[PlnVariant, ...]:
    return tuple(_PLN_RULES[rule])


def run_nars(rule: RuleKind, p1: TruthValue, p2: TruthValue, k: float) -> InferenceResult:
    if rule is RuleKind.DEDUCTION:
        return nars.nars_deduction(p1, p2)
    if rule is RuleKind.INDUCTION:
        return nars.nars_induction(p1, p2, k)
    return nars.nars_abduction(p1, p2, k)


def run_pln(
    rule: RuleKind,
    variant: PlnVariant,
    p1: TruthValue,
    p2: TruthValue,
    terms: Optional[TermProbabilities] = None,
) -> InferenceResult:
    try:
        fn = _PLN_RULES[rule][variant]
    except KeyError:
        raise UsageError(f"variant {variant.value!r} does not apply to {rule.value}") from None
    if variant.needs_terms and terms is None:
        raise UsageError(f"variant {variant.value!r} requires term probabilities")
    return fn(p1, p2, terms)


def check_variants(
    rule: RuleKind, variants: Sequence[PlnVariant], terms: Optional[TermProbabilities]
) -> tuple[PlnVariant, ...]:
    """Validate a variant request and return it de-duplicated, order preserved."""
    variants = tuple(dict.fromkeys(variants))
    if not variants:
        raise UsageError("at least one PLN variant is required")
    for v in variants:
        if v not in _PLN_RULES[rule]:
            allowed = ", ".join(a.value for a in _PLN_RULES[rule])
            raise UsageError(
                f"variant {v.value!r} does not apply to {rule.value} (allowed: {allowed})"
            )
    wants_terms = any(v.needs_terms for v in variants)
    if wants_terms and terms is None:
        raise UsageError("full variants require term probabilities")
    if terms is not None and not wants_terms:
        raise UsageError("term probabilities given but no full variant requested")
    return variants


@dataclass(frozen=True)
class ComparisonRecord:
    rule: RuleKind
    premise1: TruthValue
    premise2: TruthValue
    k: float
    terms: Optional[TermProbabilities]
    pln: dict[PlnVariant, InferenceResult]
    nars: InferenceResult
    power_delta: dict[PlnVariant, float]
    abs_power_delta: dict[PlnVariant, float]

    @property
    def point(self) -> tuple[float, float, float, float]:
        return (
            self.premise1.value,
            self.premise1.confidence,
            self.premise2.value,
            self.premise2.confidence,
        )


def _compare(
    rule: RuleKind,
    p1: TruthValue,
    p2: TruthValue,
    k: float,
    variants: tuple[PlnVariant, ...],
    terms: Optional[TermProbabilities],
) -> ComparisonRecord:
    table = _PLN_RULES[rule]
    n = run_nars(rule, p1, p2, k)
    results = {v: table[v](p1, p2, terms) for v in variants}
    delta = {v: r.power - n.power for v, r in results.items()}
    return ComparisonRecord(
        rule, p1, p2, k, terms, results, n, delta, {v: abs(d) for v, d in delta.items()}
    )


def compare_point(
    rule: RuleKind,
    p1: TruthValue,
    p2: TruthValue,
    k: float = DEFAULT_K,
    variants: Sequence[PlnVariant] = (PlnVariant.INDEPENDENCE_SIMPLIFIED,),
    terms: Optional[TermProbabilities] = None,
) -> ComparisonRecord:
    """Evaluate the NARS rule and each requested PLN variant on the same premises.

    Raises ``UsageError`` for variants that don't fit the rule or a missing
    (or superfluous) ``terms``; singularities from the formulas propagate.
    """
    check_k(k)
    return _compare(rule, p1, p2, k, check_variants(rule, variants, terms), terms)


def quantity(record: ComparisonRecord, name: str) -> float:
    """Look up a named scalar on a record.

    Names are ``nars.<field>`` or ``<variant>.<field>`` where field is one of
    ``value``, ``confidence``, ``power``; PLN variants also expose
    ``power_delta``.
    """
    system, _, attr = name.rpartition(".")
    if system == "nars":
        result = record.nars
    else:
        try:
            variant = PlnVariant(system)
            result = record.pln[variant]
        except (ValueError, KeyError):
            raise KeyError(name) from None
        if attr == "power_delta":
            return record.power_delta[variant]
    if attr == "value":
        return result.truth.value
    if attr == "confidence":
        return result.truth.confidence
    if attr == "power":
        return result.power
    raise KeyError(name)


# --------------------------------------------------------------------------
# Published worked examples
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class WorkedExample:
    title: str
    rule: RuleKind
    premise1: tuple[float, float]
    premise2: tuple[float, float]
    variants: tuple[PlnVariant, ...]
    expected: Mapping[str, float]
    k: float = DEFAULT_K


PAPER_EXAMPLES: tuple[WorkedExample, ...] = (
    WorkedExample(
        "Example 1: deduction",
        RuleKind.DEDUCTION,
        (0.6, 0.8),
        (0.7, 0.9),
        (PlnVariant.INDEPENDENCE_SIMPLIFIED, PlnVariant.GEOMETRY_PAPER_SIMPLIFIED),
        {
            "nars.value": 0.4773,
            "nars.confidence": 0.6336,
            "nars.power": 0.3024,
            "independence-simplified.value": 0.42,
            "independence-simplified.confidence": 0.72,
            "independence-simplified.power": 0.3024,
            "geometry-paper-simplified.value": 0.3231,
            "geometry-paper-simplified.power": 0.2323,
        },
    ),
    WorkedExample(
        "Example 2: induction",
        RuleKind.INDUCTION,
        (0.6, 0.8),
        (0.7, 0.9),
        (PlnVariant.INDEPENDENCE_SIMPLIFIED,),
        {
            "nars.value": 0.6,
            "nars.confidence": 0.5024,
            "nars.power": 0.3014,
            "independence-simplified.value": 0.42,
            "independence-simplified.confidence": 0.72,
            "independence-simplified.power": 0.3024,
            "independence-simplified.power_delta": 0.001,
        },
    ),
    WorkedExample(
        "Example 3: abduction",
        RuleKind.ABDUCTION,
        (0.5, 0.7),
        (0.4, 0.6),
        (PlnVariant.INDEPENDENCE_SIMPLIFIED,),
        {
            "nars.value": 0.4,
            "nars.confidence": 0.2958,
            "nars.power": 0.1183,
            "independence-simplified.value": 0.2,
            "independence-simplified.confidence": 0.42,
            "independence-simplified.power": 0.084,
        },
    ),
)


@dataclass(frozen=True)
class Check:
    name: str
    computed: float
    expected: float
    passed: bool


@dataclass(frozen=True)
class ExampleOutcome:
    title: str
    record: ComparisonRecord
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def check_expected(
    record: ComparisonRecord, expected: Mapping[str, float], tolerance: float = PAPER_TOLERANCE
) -> tuple[Check, ...]:
    checks = []
    for name, want in expected.items():
        got = quantity(record, name)
        checks.append(Check(name, got, want, abs(got - want) <= tolerance))
    return tuple(checks)


def paper_examples(
    tolerance: float = PAPER_TOLERANCE,
    examples: Optional[Sequence[WorkedExample]] = None,
) -> list[ExampleOutcome]:
    """Recompute the three published worked examples and check every printed value."""
    if examples is None:
        examples = PAPER_EXAMPLES
    out = []
    for ex in examples:
        record = compare_point(
            ex.rule, TruthValue(*ex.premise1), TruthValue(*ex.premise2), ex.k, ex.variants
        )
        out.append(ExampleOutcome(ex.title, record, check_expected(record, ex.expected, tolerance)))
    return out


# --------------------------------------------------------------------------
# Grid sweeps
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    """A grid over premise space ``(f1, c1, f2, c2)``.

    Every dimension not listed in ``pins`` is swept from 0 to 1 inclusive in
    steps of ``grid_step``.
    """

    rule: RuleKind
    variants: tuple[PlnVariant, ...] = (PlnVariant.INDEPENDENCE_SIMPLIFIED,)
    grid_step: float = 0.05
    k: float = DEFAULT_K
    pins: Mapping[str, float] = field(default_factory=dict)
    terms: Optional[TermProbabilities] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "variants", check_variants(self.rule, self.variants, self.terms))
        if not (0.0 < self.grid_step <= 1.0):
            raise UsageError(f"grid_step must lie in (0, 1], got {self.grid_step!r}")
        if abs(1.0 / self.grid_step - self.steps) > 1e-9:
            raise UsageError(f"grid_step {self.grid_step!r} does not divide 1 evenly")
        try:
            check_k(self.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        for dim, value in self.pins.items():
            if dim not in DIMENSIONS:
                raise UsageError(f"unknown dimension {dim!r}; expected one of {DIMENSIONS}")
            if not (0.0 <= value <= 1.0):
                raise UsageError(f"pinned {dim} must lie in [0, 1], got {value!r}")
        if not self.swept:
            raise UsageError("at least one dimension must be swept")

    @property
    def steps(self) -> int:
        return round(1.0 / self.grid_step)

    @property
    def swept(self) -> tuple[str, ...]:
        return tuple(d for d in DIMENSIONS if d not in self.pins)

    def axes(self) -> list[tuple[float, ...]]:
        # i / n rather than i * step so both endpoints are exact
        n = self.steps
        grid = tuple(i / n for i in range(n + 1))
        return [(float(self.pins[d]),) if d in self.pins else grid for d in DIMENSIONS]

    @property
    def grid_size(self) -> int:
        return math.prod(len(a) for a in self.axes())


@dataclass(frozen=True)
class SweepSummary:
    count: int
    evaluated: int
    skipped: int
    mean_abs_power_delta: dict[PlnVariant, float]
    max_abs_power_delta: dict[PlnVariant, float]
    argmax_point: dict[PlnVariant, Optional[tuple[float, float, float, float]]]

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "evaluated": self.evaluated,
            "skipped": self.skipped,
            "variants": {
                v.value: {
                    "mean_abs_power_delta": self.mean_abs_power_delta[v],
                    "max_abs_power_delta": self.max_abs_power_delta[v],
                    "argmax_point": (
                        None
                        if self.argmax_point[v] is None
                        else dict(zip(DIMENSIONS, self.argmax_point[v]))
                    ),
                }
                for v in self.mean_abs_power_delta
            },
        }


def run_sweep(cfg: SweepConfig) -> tuple[list[ComparisonRecord], SweepSummary]:
    """Evaluate every grid point in row-major order (``c2`` varies fastest).

    Points where any formula hits a singularity are skipped and counted.
    """
    tv_cache: dict[tuple[float, float], TruthValue] = {}

    def tv(v: float, c: float) -> TruthValue:
        key = (v, c)
        t = tv_cache.get(key)
        if t is None:
            t = tv_cache[key] = TruthValue(v, c)
        return t

    records: list[ComparisonRecord] = []
    skipped = 0
    for f1, c1, f2, c2 in itertools.product(*cfg.axes()):
        try:
            rec = _compare(cfg.rule, tv(f1, c1), tv(f2, c2), cfg.k, cfg.variants, cfg.terms)
        except SingularityError:
            skipped += 1
            continue
        records.append(rec)

    means, maxes, argmax = {}, {}, {}
    for v in cfg.variants:
        deltas = [r.abs_power_delta[v] for r in records]
        if deltas:
            i = max(range(len(deltas)), key=deltas.__getitem__)
            means[v] = math.fsum(deltas) / len(deltas)
            maxes[v] = deltas[i]
            argmax[v] = records[i].point
        else:
            means[v], maxes[v], argmax[v] = 0.0, 0.0, None
    summary = SweepSummary(cfg.grid_size, len(records), skipped, means, maxes, argmax)
    return records, summary
