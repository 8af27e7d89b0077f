"""PLN simple-truth-value formulas for deduction, induction and abduction.

Full formulas take explicit term probabilities ``(s_A, s_B, s_C)``; the
``*_simplified`` variants are the products that remain when those term
probabilities are too uncertain to be informative. Confidence is always the
product of premise confidences.

Strengths that leave [0, 1] (possible whenever the supplied term
probabilities are inconsistent with the premises) are clamped and the
result carries ``clamped=True``.
"""

from __future__ import annotations

import enum
import math

from narspln.truth import (
    InferenceResult,
    SingularityError,
    TermProbabilities,
    TruthValue,
    _check_unit,
    clamp_unit,
)


class GeometryMode(enum.Enum):
    EXACT = "exact"
    #: drops the ``min(1, .)`` guard from the denominator, even when the sum exceeds 1
    PAPER_SIMPLIFIED = "paper-simplified"


def bayes_invert(s_ba: float, s_b: float, s_a: float) -> tuple[float, bool]:
    """Reverse an inheritance: ``s_AB = s_BA * s_B / s_A``.

    Returns the clamped strength and whether clamping happened.
    """
    _check_unit("s_ba", s_ba)
    _check_unit("s_b", s_b)
    _check_unit("s_a", s_a)
    if s_a == 0.0:
        raise SingularityError("Bayes inversion is undefined for s_a = 0")
    return _clamp_overflow(s_ba * s_b / s_a)


def _clamp_overflow(x: float) -> tuple[float, bool]:
    # A subnormal divisor can overflow a ratio to +-inf; that still means "beyond the bound".
    if math.isinf(x):
        return (1.0 if x > 0 else 0.0), True
    return clamp_unit(x)


def _independence_raw(s_ab: float, s_bc: float, s_b: float, s_c: float) -> float:
    return s_ab * s_bc + (1.0 - s_ab) * (s_c - s_b * s_bc) / (1.0 - s_b)


def pln_deduction_independence(
    tv_ab: TruthValue, tv_bc: TruthValue, terms: TermProbabilities
) -> InferenceResult:
    """Deduction assuming A and C are independent inside B. ``s_A`` is unused."""
    if terms.s_b == 1.0:
        raise SingularityError("independence deduction needs s_b < 1")
    s, clamped = clamp_unit(_independence_raw(tv_ab.value, tv_bc.value, terms.s_b, terms.s_c))
    return InferenceResult.of(s, tv_ab.confidence * tv_bc.confidence, clamped=clamped)


def pln_deduction_geometry(
    tv_ab: TruthValue, tv_bc: TruthValue, mode: GeometryMode = GeometryMode.EXACT
) -> InferenceResult:
    """Deduction assuming terms are spheres in feature space.

    ``EXACT`` divides by ``min(1, s_AB + s_BC)``; ``PAPER_SIMPLIFIED`` divides
    by the bare sum, which under-estimates the strength once the sum passes 1.
    """
    s_ab, s_bc = tv_ab.value, tv_bc.value
    c = tv_ab.confidence * tv_bc.confidence
    total = s_ab + s_bc
    if total == 0.0:
        if mode is GeometryMode.PAPER_SIMPLIFIED:
            raise SingularityError("simplified geometry deduction needs s_ab + s_bc > 0")
        return InferenceResult.of(0.0, c, degenerate=True)
    denom = total if mode is GeometryMode.PAPER_SIMPLIFIED else min(1.0, total)
    # Both denominators keep the ratio inside [0, 1]; the clamp only guards rounding.
    s, clamped = clamp_unit(s_ab * s_bc / denom)
    return InferenceResult.of(s, c, clamped=clamped)


def pln_deduction_simplified(tv_ab: TruthValue, tv_bc: TruthValue) -> InferenceResult:
    return InferenceResult.of(tv_ab.value * tv_bc.value, tv_ab.confidence * tv_bc.confidence)


def pln_induction_full(
    tv_ba: TruthValue, tv_bc: TruthValue, terms: TermProbabilities
) -> InferenceResult:
    """Induction as Bayes inversion of ``B -> A`` followed by independence deduction.

    Evaluated in one pass, with the inverted strength ``s_BA s_B / s_A``
    substituted into the deduction formula unclamped; only the final strength
    is clamped.
    """
    s_a, s_b, s_c = terms.s_a, terms.s_b, terms.s_c
    if s_a == 0.0:
        raise SingularityError("full induction needs s_a > 0")
    if s_b == 1.0:
        raise SingularityError("full induction needs s_b < 1")
    s_ba, s_bc = tv_ba.value, tv_bc.value
    inverted = s_ba * s_b / s_a
    base = (s_c - s_b * s_bc) / (1.0 - s_b)
    raw = inverted * s_bc + (1.0 - inverted) * base
    if not math.isfinite(raw):
        # Only reachable with a (sub)normal-tiny s_a: the inverted-strength term dominates,
        # so its sign decides which bound the strength lies beyond.
        diff = s_bc - base
        raw = base if diff == 0.0 or s_ba == 0.0 else math.copysign(math.inf, diff)
    s, clamped = _clamp_overflow(raw)
    return InferenceResult.of(s, tv_ba.confidence * tv_bc.confidence, clamped=clamped)


def pln_induction_simplified(tv_ba: TruthValue, tv_bc: TruthValue) -> InferenceResult:
    # With uninformative term probabilities the ratio s_B / s_A is taken as 1
    # and the correction term is dropped.
    return InferenceResult.of(tv_ba.value * tv_bc.value, tv_ba.confidence * tv_bc.confidence)


def pln_abduction_full(
    tv_ab: TruthValue, tv_cb: TruthValue, terms: TermProbabilities
) -> InferenceResult:
    """Abduction: invert ``C -> B`` into ``B -> C``, then deduce ``A -> C``.

    The inverted strength is clamped before it enters deduction; the clamp
    flags of both stages are OR-ed.
    """
    if terms.s_b == 0.0:
        raise SingularityError("full abduction needs s_b > 0 to invert C -> B")
    if terms.s_b == 1.0:
        raise SingularityError("full abduction needs s_b < 1")
    s_bc, inv_clamped = bayes_invert(tv_cb.value, terms.s_c, terms.s_b)
    bc = TruthValue(s_bc, tv_cb.confidence)
    ded = pln_deduction_independence(tv_ab, bc, terms)
    return InferenceResult(ded.truth, ded.power, clamped=inv_clamped or ded.clamped)


def pln_abduction_simplified(tv_ab: TruthValue, tv_cb: TruthValue) -> InferenceResult:
    return InferenceResult.of(tv_ab.value * tv_cb.value, tv_ab.confidence * tv_cb.confidence)
