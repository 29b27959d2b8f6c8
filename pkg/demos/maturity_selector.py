"""Picking a transform automatically from the maturity of the evidence.

SumBel near 1 and SumPl near 1 mean the evidence is nearly Bayesian and
an aggressive transform (PrScP) is justified; lots of compound mass
pushes both sums away from 1 and the selector falls back toward the
cautious equal-split BetP. Threshold profiles are data, so a system can
carry one per operating regime.
"""

from pignistic import (
    Frame,
    MassFunction,
    ThresholdSet,
    evaluate,
)

profiles = {
    "peacetime": ThresholdSet((0.3, 0.5, 0.7), (1.2, 1.5, 1.8), "peacetime"),
    "wartime": ThresholdSet((0.1, 0.2, 0.3), (2.1, 2.3, 2.5), "wartime"),
}

frame = Frame(["F", "N", "U", "H"])

scenarios = {
    "fresh track, total ignorance": MassFunction.from_labels(
        frame, [(["F", "N", "U", "H"], 1.0)]
    ),
    "partially resolved": MassFunction.from_labels(
        frame,
        [(["F"], 0.35), (["N"], 0.15), (["F", "N"], 0.30), (["F", "N", "U", "H"], 0.20)],
    ),
    "nearly Bayesian": MassFunction.from_labels(
        frame,
        [(["F"], 0.70), (["N"], 0.20), (["U"], 0.05), (["F", "N"], 0.05)],
    ),
}

RISK = 0.0455
for profile_name, thresholds in profiles.items():
    print(f"profile: {profile_name}")
    for scenario, bba in scenarios.items():
        report = evaluate(bba, thresholds, RISK)
        print(
            f"  {scenario:<30} SumBel={bba.sum_bel():.2f} SumPl={bba.sum_pl():.2f}"
            f"  -> {report.method.value:<6} PIC={report.pic.value:.4f}"
            f"  show {list(report.selected)}"
        )
    print()
