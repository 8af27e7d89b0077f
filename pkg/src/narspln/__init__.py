"""Side-by-side NARS and PLN truth-value calculi for first-order term logic.

The three syllogistic rules (deduction, induction, abduction) are implemented
under both calculi, along with the ``power`` metric (value times confidence)
used to compare them, and a harness for grid sweeps over premise space.
"""

from narspln.truth import (
    CalculusError,
    DomainError,
    EvidenceCount,
    InferenceResult,
    NumericError,
    SingularityError,
    TermProbabilities,
    TruthValue,
    clamp_unit,
    confidence_from_evidence,
    make_truth_value,
    power,
)
from narspln.nars import nars_abduction, nars_deduction, nars_induction
from narspln.pln import (
    GeometryMode,
    bayes_invert,
    pln_abduction_full,
    pln_abduction_simplified,
    pln_deduction_geometry,
    pln_deduction_independence,
    pln_deduction_simplified,
    pln_induction_full,
    pln_induction_simplified,
)
from narspln.harness import (
    ComparisonRecord,
    PlnVariant,
    RuleKind,
    SweepConfig,
    SweepSummary,
    UsageError,
    compare_point,
    paper_examples,
    run_sweep,
)

__version__ = "0.1.0"
