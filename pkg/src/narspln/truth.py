"""Shared value types, validation and clamping for both calculi."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


class CalculusError(Exception):
    """Base class for errors raised by the truth-value calculi."""


class DomainError(CalculusError, ValueError):
    """An argument lies outside its mathematical domain."""


class SingularityError(CalculusError, ZeroDivisionError):
    """A formula's denominator vanishes for the given term probabilities."""


class NumericError(CalculusError, ArithmeticError):
    """A non-finite number reached a numeric routine."""


def _check_unit(name: str, x: float) -> None:
    # Written so that NaN fails the comparison.
    if not (0.0 <= x <= 1.0):
        raise DomainError(f"{name} must be a finite number in [0, 1], got {x!r}")


class _TruthPair(NamedTuple):
    value: float
    confidence: float


class TruthValue(_TruthPair):
    """A ``(value, confidence)`` pair.

    ``value`` is a frequency under NARS and a strength under PLN.
    """

    __slots__ = ()

    def __new__(cls, value: float, confidence: float) -> TruthValue:
        _check_unit("value", value)
        _check_unit("confidence", confidence)
        return tuple.__new__(cls, (value, confidence))

    @property
    def power(self) -> float:
        return self.value * self.confidence


@dataclass(frozen=True, slots=True)
class EvidenceCount:
    n: float
    k: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.n) and self.n >= 0.0):
            raise DomainError(f"n must be finite and non-negative, got {self.n!r}")
        check_k(self.k)


@dataclass(frozen=True, slots=True)
class TermProbabilities:
    """Marginal probabilities of the terms A, B and C in the inference context.

    Formulas that divide by ``1 - s_b`` or by ``s_a`` check their own
    preconditions; construction only enforces the unit interval.
    """

    s_a: float
    s_b: float
    s_c: float

    def __post_init__(self) -> None:
        _check_unit("s_a", self.s_a)
        _check_unit("s_b", self.s_b)
        _check_unit("s_c", self.s_c)


class _Result(NamedTuple):
    truth: TruthValue
    power: float
    clamped: bool
    degenerate: bool


class InferenceResult(_Result):
    """Conclusion of one rule application.

    ``clamped`` is set when an intermediate or final strength left [0, 1] and
    was projected back; ``degenerate`` when a 0/0 form was resolved by
    convention.
    """

    __slots__ = ()

    def __new__(
        cls, truth: TruthValue, power: float, clamped: bool = False, degenerate: bool = False
    ) -> InferenceResult:
        if power != truth.value * truth.confidence:
            raise ValueError(f"power {power!r} does not equal value * confidence of {truth!r}")
        return tuple.__new__(cls, (truth, power, clamped, degenerate))

    @classmethod
    def of(
        cls, value: float, confidence: float, clamped: bool = False, degenerate: bool = False
    ) -> InferenceResult:
        truth = TruthValue(value, confidence)
        return tuple.__new__(cls, (truth, value * confidence, clamped, degenerate))

    @property
    def value(self) -> float:
        return self.truth.value

    @property
    def confidence(self) -> float:
        return self.truth.confidence


def check_k(k: float) -> float:
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError(f"experience parameter k must be finite and positive, got {k!r}")
    return k


def make_truth_value(value: float, confidence: float) -> TruthValue:
    """Validate and build a truth value; the error message names the bad field."""
    return TruthValue(float(value), float(confidence))


def power(tv: TruthValue) -> float:
    return tv.value * tv.confidence


def confidence_from_evidence(e: EvidenceCount) -> float:
    """Confidence ``n / (n + k)`` carried by ``n`` observations."""
    return e.n / (e.n + e.k)


def clamp_unit(x: float) -> tuple[float, bool]:
    """Project ``x`` into [0, 1], reporting whether it had to move."""
    if not math.isfinite(x):
        raise NumericError(f"cannot clamp non-finite value {x!r}")
    if x < 0.0:
        return 0.0, True
    if x > 1.0:
        return 1.0, True
    return x, False
