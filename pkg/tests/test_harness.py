import dataclasses
import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from narspln import (
    PlnVariant,
    RuleKind,
    SingularityError,
    SweepConfig,
    TermProbabilities,
    TruthValue,
    UsageError,
    compare_point,
    paper_examples,
    run_sweep,
)
from narspln import harness
from narspln.harness import quantity

TV = TruthValue
V = PlnVariant
IS = V.INDEPENDENCE_SIMPLIFIED


def test_compare_point_deduction():
    rec = compare_point(
        RuleKind.DEDUCTION, TV(0.6, 0.8), TV(0.7, 0.9), 0.5, [IS, V.GEOMETRY_PAPER_SIMPLIFIED]
    )
    assert rec.nars.power == pytest.approx(0.3024, abs=5e-4)
    assert rec.pln[IS].power == pytest.approx(0.3024, abs=5e-4)
    assert rec.pln[V.GEOMETRY_PAPER_SIMPLIFIED].power == pytest.approx(0.2323, abs=5e-4)
    assert rec.power_delta[IS] == pytest.approx(0.0, abs=5e-4)
    assert rec.power_delta[V.GEOMETRY_PAPER_SIMPLIFIED] == pytest.approx(-0.0701, abs=5e-4)
    for v in rec.pln:
        assert rec.power_delta[v] == rec.pln[v].power - rec.nars.power
        assert rec.abs_power_delta[v] == abs(rec.power_delta[v])


def test_compare_point_induction_and_abduction():
    rec = compare_point(RuleKind.INDUCTION, TV(0.6, 0.8), TV(0.7, 0.9), 0.5, [IS])
    assert rec.power_delta[IS] == pytest.approx(0.0010, abs=5e-4)
    rec = compare_point(RuleKind.ABDUCTION, TV(0.5, 0.7), TV(0.4, 0.6), 0.5, [IS])
    assert rec.power_delta[IS] == pytest.approx(-0.0343, abs=5e-4)


@pytest.mark.parametrize(
    "rule, variants, terms",
    [
        (RuleKind.INDUCTION, [V.GEOMETRY_EXACT], None),
        (RuleKind.ABDUCTION, [V.INDUCTION_FULL], TermProbabilities(0.5, 0.5, 0.5)),
        (RuleKind.DEDUCTION, [V.INDEPENDENCE_FULL], None),
        (RuleKind.DEDUCTION, [IS], TermProbabilities(0.5, 0.5, 0.5)),
        (RuleKind.DEDUCTION, [], None),
    ],
)
def test_compare_point_usage_errors(rule, variants, terms):
    with pytest.raises(UsageError):
        compare_point(rule, TV(0.5, 0.5), TV(0.5, 0.5), 0.5, variants, terms)


def test_compare_point_propagates_singularities():
    with pytest.raises(SingularityError):
        compare_point(
            RuleKind.INDUCTION,
            TV(0.5, 0.5),
            TV(0.5, 0.5),
            0.5,
            [V.INDUCTION_FULL],
            TermProbabilities(0.0, 0.5, 0.5),
        )


def test_quantity_lookup():
    rec = compare_point(RuleKind.DEDUCTION, TV(0.6, 0.8), TV(0.7, 0.9))
    assert quantity(rec, "nars.confidence") == rec.nars.truth.confidence
    assert quantity(rec, "independence-simplified.power_delta") == rec.power_delta[IS]
    with pytest.raises(KeyError):
        quantity(rec, "geometry-exact.power")
    with pytest.raises(KeyError):
        quantity(rec, "nars.strength")


# -- worked examples ---------------------------------------------------------


def test_paper_examples_all_pass():
    outcomes = paper_examples()
    assert [o.title for o in outcomes] == [
        "Example 1: deduction",
        "Example 2: induction",
        "Example 3: abduction",
    ]
    assert [len(o.checks) for o in outcomes] == [8, 7, 6]
    for o in outcomes:
        assert o.passed, [c for c in o.checks if not c.passed]


def test_paper_examples_detect_perturbation():
    first = harness.PAPER_EXAMPLES[0]
    bad = dataclasses.replace(first, expected={**first.expected, "nars.power": 0.31})
    outcomes = paper_examples(examples=[bad])
    assert not outcomes[0].passed
    failed = [c.name for c in outcomes[0].checks if not c.passed]
    assert failed == ["nars.power"]


# -- sweeps ------------------------------------------------------------------


def test_sweep_deduction_identity():
    records, summary = run_sweep(SweepConfig(RuleKind.DEDUCTION, (IS,), grid_step=0.25))
    assert len(records) == 625 == summary.count == summary.evaluated
    assert summary.skipped == 0
    assert summary.max_abs_power_delta[IS] < 1e-12
    assert all(r.abs_power_delta[IS] < 1e-12 for r in records)


def test_sweep_induction_matches_straight_loop_oracle():
    k = 0.5
    records, summary = run_sweep(SweepConfig(RuleKind.INDUCTION, (IS,), grid_step=0.1, k=k))
    grid = [i / 10 for i in range(11)]
    deltas = []
    for f1, c1, f2, c2 in itertools.product(grid, repeat=4):
        nars_power = f1 * f2 * c2 * c1 / (f2 * c2 * c1 + k)
        pln_power = f1 * c1 * f2 * c2
        deltas.append(abs(pln_power - nars_power))
    assert len(records) == len(deltas) == 11**4
    assert [r.abs_power_delta[IS] for r in records] == pytest.approx(deltas, abs=1e-15)
    assert summary.mean_abs_power_delta[IS] == pytest.approx(sum(deltas) / len(deltas), abs=1e-15)
    assert summary.max_abs_power_delta[IS] == pytest.approx(max(deltas), abs=1e-15)


def test_sweep_row_major_order():
    records, _ = run_sweep(SweepConfig(RuleKind.DEDUCTION, grid_step=0.5))
    points = [r.point for r in records]
    assert points == list(itertools.product([0.0, 0.5, 1.0], repeat=4))


@pytest.mark.parametrize("step", [0.3, 0.0, -0.1, 1.5, 0.07])
def test_sweep_rejects_bad_step(step):
    with pytest.raises(UsageError):
        SweepConfig(RuleKind.DEDUCTION, grid_step=step)


def test_sweep_accepts_steps_dividing_one():
    for step in (1.0, 0.5, 0.25, 0.2, 0.1, 0.05, 0.01, 1 / 3):
        assert SweepConfig(RuleKind.DEDUCTION, grid_step=step).steps == round(1 / step)


def test_sweep_config_validation():
    with pytest.raises(UsageError):
        SweepConfig(RuleKind.DEDUCTION, pins={"f1": 0.1, "c1": 0.1, "f2": 0.1, "c2": 0.1})
    with pytest.raises(UsageError):
        SweepConfig(RuleKind.DEDUCTION, pins={"x": 0.1})
    with pytest.raises(UsageError):
        SweepConfig(RuleKind.DEDUCTION, pins={"f1": 1.1})
    with pytest.raises(UsageError):
        SweepConfig(RuleKind.DEDUCTION, k=0.0)
    with pytest.raises(UsageError):
        SweepConfig(RuleKind.INDUCTION, (V.GEOMETRY_EXACT,))


def test_sweep_pins():
    cfg = SweepConfig(RuleKind.ABDUCTION, grid_step=0.1, pins={"c1": 0.9, "c2": 0.9})
    records, summary = run_sweep(cfg)
    assert summary.count == 121 == len(records)
    assert {r.premise1.confidence for r in records} == {0.9}


def test_sweep_skips_singular_points():
    cfg = SweepConfig(RuleKind.DEDUCTION, (IS, V.GEOMETRY_PAPER_SIMPLIFIED), grid_step=0.5)
    records, summary = run_sweep(cfg)
    # f1 = f2 = 0 for every (c1, c2): 3 * 3 points
    assert summary.skipped == 9
    assert summary.count == 81
    assert summary.evaluated == len(records) == 72


def test_sweep_all_singular():
    cfg = SweepConfig(
        RuleKind.INDUCTION,
        (V.INDUCTION_FULL,),
        grid_step=0.5,
        terms=TermProbabilities(0.0, 0.5, 0.5),
    )
    records, summary = run_sweep(cfg)
    assert records == [] and summary.skipped == 81
    assert summary.max_abs_power_delta[V.INDUCTION_FULL] == 0.0
    assert summary.argmax_point[V.INDUCTION_FULL] is None


sweep_configs = st.builds(
    SweepConfig,
    rule=st.sampled_from(list(RuleKind)),
    variants=st.just((IS,)),
    grid_step=st.sampled_from([0.25, 0.2, 0.5]),
    k=st.sampled_from([0.5, 1.0, 2.0]),
)


@settings(max_examples=20, deadline=None)
@given(sweep_configs)
def test_sweep_summary_consistency_and_determinism(cfg):
    records, summary = run_sweep(cfg)
    again, summary2 = run_sweep(cfg)
    assert records == again and summary == summary2
    assert summary.count == (cfg.steps + 1) ** 4
    mean, top = summary.mean_abs_power_delta[IS], summary.max_abs_power_delta[IS]
    assert 0.0 <= mean <= top <= 1.0
    f1, c1, f2, c2 = summary.argmax_point[IS]
    rec = compare_point(cfg.rule, TV(f1, c1), TV(f2, c2), cfg.k)
    assert math.isclose(rec.abs_power_delta[IS], top, abs_tol=1e-12)
