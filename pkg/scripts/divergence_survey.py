"""Survey how far PLN power drifts from NARS power across premise space.

Sweeps every rule against each applicable term-probability-free PLN variant
for a handful of experience parameters, and prints one summary row per
(rule, variant, k). Optionally writes the table as CSV.

    python scripts/divergence_survey.py --grid-step 0.1 --k 0.5 1 2 --csv survey.csv
"""

import argparse
import csv
import sys

from narspln import PlnVariant, RuleKind, SweepConfig, run_sweep

# Full variants need pinned term probabilities and are left to `narspln sweep --terms`.
TERM_FREE = {
    RuleKind.DEDUCTION: (
        PlnVariant.INDEPENDENCE_SIMPLIFIED,
        PlnVariant.GEOMETRY_EXACT,
        PlnVariant.GEOMETRY_PAPER_SIMPLIFIED,
    ),
    RuleKind.INDUCTION: (PlnVariant.INDEPENDENCE_SIMPLIFIED,),
    RuleKind.ABDUCTION: (PlnVariant.INDEPENDENCE_SIMPLIFIED,),
}

COLUMNS = ["rule", "variant", "k", "points", "skipped", "mean_abs_power_delta",
           "max_abs_power_delta", "argmax_f1", "argmax_c1", "argmax_f2", "argmax_c2"]


def survey(grid_step, ks):
    for rule, variants in TERM_FREE.items():
        # NARS deduction ignores k; one pass is enough.
        for k in ks[:1] if rule is RuleKind.DEDUCTION else ks:
            _, summary = run_sweep(SweepConfig(rule, variants, grid_step=grid_step, k=k))
            for v in variants:
                point = summary.argmax_point[v] or (None,) * 4
                yield [rule.value, v.value, k, summary.count, summary.skipped,
                       summary.mean_abs_power_delta[v], summary.max_abs_power_delta[v], *point]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grid-step", type=float, default=0.1)
    ap.add_argument("--k", type=float, nargs="+", default=[0.5, 1.0])
    ap.add_argument("--csv", help="also write the table to this path")
    args = ap.parse_args()

    rows = list(survey(args.grid_step, args.k))
    print(f"{'rule':<10} {'variant':<26} {'k':>5} {'mean|d|':>9} {'max|d|':>9}  argmax(f1,c1,f2,c2)")
    for r in rows:
        where = "-" if r[7] is None else ",".join(f"{x:g}" for x in r[7:])
        print(f"{r[0]:<10} {r[1]:<26} {r[2]:>5g} {r[5]:>9.4f} {r[6]:>9.4f}  {where}")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(COLUMNS)
            w.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
