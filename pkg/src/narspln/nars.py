"""NARS truth functions for the three first-order syllogistic rules.

Premise roles follow the usual NAL layout:

* deduction: ``A -> B <f1, c1>`` and ``B -> C <f2, c2>`` give ``A -> C``
* induction: ``B -> A <f1, c1>`` and ``B <f2, c2>`` give ``A``
* abduction: ``A -> B <f1, c1>`` and ``B <f2, c2>`` give ``A``

Terms are not represented; only the numbers flow through.
"""

from __future__ import annotations

from narspln.truth import InferenceResult, TruthValue, check_k

DEFAULT_K = 0.5


def nars_deduction(tv1: TruthValue, tv2: TruthValue) -> InferenceResult:
    f1, c1 = tv1.value, tv1.confidence
    f2, c2 = tv2.value, tv2.confidence
    # f1 + f2 - f1*f2 is the probabilistic "or"; it only vanishes at f1 = f2 = 0.
    either = f1 + f2 - f1 * f2
    if either == 0.0:
        return InferenceResult.of(0.0, 0.0, degenerate=True)
    f = f1 * f2 / either
    c = c1 * c2 * either
    return InferenceResult.of(f, c)


def nars_induction(tv1: TruthValue, tv2: TruthValue, k: float = DEFAULT_K) -> InferenceResult:
    """Induction keeps the first premise's frequency; evidence comes from ``f2 c2 c1``."""
    check_k(k)
    w = tv2.value * tv2.confidence * tv1.confidence
    return InferenceResult.of(tv1.value, w / (w + k))


def nars_abduction(tv1: TruthValue, tv2: TruthValue, k: float = DEFAULT_K) -> InferenceResult:
    """Mirror image of :func:`nars_induction`: frequency from ``tv2``, evidence ``f1 c1 c2``."""
    check_k(k)
    w = tv1.value * tv1.confidence * tv2.confidence
    return InferenceResult.of(tv2.value, w / (w + k))
