import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from narspln import (
    DomainError,
    EvidenceCount,
    InferenceResult,
    NumericError,
    TermProbabilities,
    TruthValue,
    clamp_unit,
    confidence_from_evidence,
    make_truth_value,
    power,
)
from strategies import truth_values


def test_make_truth_value():
    tv = make_truth_value(0.6, 0.8)
    assert (tv.value, tv.confidence) == (0.6, 0.8)
    assert make_truth_value(0.0, 0.0) == TruthValue(0.0, 0.0)
    with pytest.raises(DomainError, match="value"):
        make_truth_value(1.2, 0.5)
    with pytest.raises(DomainError, match="confidence"):
        make_truth_value(0.5, -0.01)
    with pytest.raises(DomainError, match="value"):
        make_truth_value(math.nan, 0.5)
    with pytest.raises(DomainError, match="confidence"):
        make_truth_value(0.5, math.inf)


@given(
    st.floats(allow_nan=True, allow_infinity=True, min_value=None, max_value=None)
    | st.floats(min_value=-0.5, max_value=1.5),
    st.floats(allow_nan=True, allow_infinity=True)
    | st.floats(min_value=-0.5, max_value=1.5),
)
def test_make_truth_value_accepts_exactly_the_unit_square(v, c):
    inside = 0.0 <= v <= 1.0 and 0.0 <= c <= 1.0
    if inside:
        assert make_truth_value(v, c) == (v, c)
    else:
        with pytest.raises(DomainError):
            make_truth_value(v, c)


def test_power():
    assert power(TruthValue(0.42, 0.72)) == pytest.approx(0.3024, abs=1e-15)
    assert power(TruthValue(0.7, 0.0)) == 0.0
    assert power(TruthValue(1.0, 1.0)) == 1.0


@given(truth_values)
def test_power_bounded_by_both_factors(tv):
    p = power(tv)
    assert 0.0 <= p <= 1.0
    assert p <= tv.value
    assert p <= tv.confidence


def test_confidence_from_evidence():
    assert confidence_from_evidence(EvidenceCount(0, 1)) == 0.0
    assert confidence_from_evidence(EvidenceCount(1, 1)) == 0.5
    assert confidence_from_evidence(EvidenceCount(9, 1)) == pytest.approx(0.9, abs=1e-15)


def test_evidence_count_validation():
    with pytest.raises(DomainError):
        EvidenceCount(-1, 1)
    with pytest.raises(DomainError):
        EvidenceCount(1, 0)
    with pytest.raises(DomainError):
        EvidenceCount(1, math.nan)


counts = st.floats(min_value=0.0, max_value=1e3)
ks = st.floats(min_value=1e-2, max_value=1e3)


@given(counts, counts, ks)
def test_confidence_strictly_increasing_in_n(n1, n2, k):
    assume(abs(n1 - n2) > 1e-6)
    lo, hi = sorted((n1, n2))
    assert confidence_from_evidence(EvidenceCount(lo, k)) < confidence_from_evidence(
        EvidenceCount(hi, k)
    )


@given(st.floats(min_value=1e-3, max_value=1e3), ks, ks)
def test_confidence_strictly_decreasing_in_k(n, k1, k2):
    assume(abs(k1 - k2) > 1e-6)
    lo, hi = sorted((k1, k2))
    assert confidence_from_evidence(EvidenceCount(n, lo)) > confidence_from_evidence(
        EvidenceCount(n, hi)
    )


@given(counts, ks)
def test_confidence_in_half_open_unit_interval(n, k):
    c = confidence_from_evidence(EvidenceCount(n, k))
    assert 0.0 <= c < 1.0


@pytest.mark.parametrize(
    "x, expected",
    [(0.42, (0.42, False)), (2.4, (1.0, True)), (-0.1, (0.0, True)), (0.0, (0.0, False)),
     (1.0, (1.0, False))],
)
def test_clamp_unit(x, expected):
    assert clamp_unit(x) == expected


@pytest.mark.parametrize("x", [math.nan, math.inf, -math.inf])
def test_clamp_unit_rejects_non_finite(x):
    with pytest.raises(NumericError):
        clamp_unit(x)


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_clamp_unit_idempotent(x):
    once, flag = clamp_unit(x)
    assert clamp_unit(once) == (once, False)
    assert flag == (not 0.0 <= x <= 1.0)


def test_term_probabilities_validation():
    TermProbabilities(0.0, 1.0, 0.5)
    with pytest.raises(DomainError, match="s_b"):
        TermProbabilities(0.5, 1.5, 0.5)


def test_inference_result_checks_power():
    tv = TruthValue(0.5, 0.5)
    assert InferenceResult(tv, 0.25).power == 0.25
    with pytest.raises(ValueError):
        InferenceResult(tv, 0.3)


def test_values_are_immutable():
    tv = TruthValue(0.5, 0.5)
    with pytest.raises(AttributeError):
        tv.value = 0.1
    with pytest.raises(AttributeError):
        InferenceResult.of(0.5, 0.5).power = 0.0
