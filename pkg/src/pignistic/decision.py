"""Risk-threshold decision sets and the information-maturity transform selector.

The selector compares the Belief and Plausibility sums of a mass function
against an ordered threshold profile: the more mature the information set
(high SumBel, low SumPl), the more aggressive the transform. Rules are
evaluated top-down with short-circuit; PraPl is never selected
automatically and remains available only by explicit request.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ValidationError
from .frame import MassFunction
from .metrics import PicScore, pic
from .transforms import (
    ProbabilityDistribution,
    SolverConfig,
    TransformResult,
    apply_transform,
)


class TransformKind(enum.Enum):
    BET_P = "BetP"
    PRA_PL = "PraPl"
    PR_PL = "PrPl"
    PR_BL = "PrBl"
    PR_SC_P = "PrScP"


@dataclass(frozen=True)
class ThresholdSet:
    """Ascending Belief and Plausibility trigger levels for the selector."""

    bel_thresholds: tuple[float, float, float]
    pl_thresholds: tuple[float, float, float]
    profile_name: str = ""

    def __post_init__(self):
        for name, triple in (
            ("bel", self.bel_thresholds),
            ("pl", self.pl_thresholds),
        ):
            if len(triple) != 3:
                raise ValidationError(f"{name} thresholds need exactly 3 values")
            if not triple[0] < triple[1] < triple[2]:
                raise ValidationError(
                    f"{name} thresholds must be strictly ascending, got {triple}"
                )


@dataclass(frozen=True)
class DecisionReport:
    """Outcome of the full select-transform-score-decide pipeline."""

    method: TransformKind
    distribution: ProbabilityDistribution
    pic: PicScore
    decision_threshold: float
    selected: tuple[str, ...]
    epsilon: float | None = None
    iterations: int | None = None


def decision_set(p: ProbabilityDistribution, threshold: float) -> list[str]:
    """Labels whose probability strictly exceeds the threshold, in frame order."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")
    return [
        label
        for label, prob in zip(p.frame.labels, p.probabilities)
        if prob > threshold
    ]


def select_transform(sum_bel: float, sum_pl: float, t: ThresholdSet) -> TransformKind:
    """Pick the transform matching the information maturity of the inputs.

    First matching rule wins; the fall-through default is BetP.
    """
    bel1, bel2, bel3 = t.bel_thresholds
    pl1, pl2, pl3 = t.pl_thresholds
    if sum_bel > bel3 and sum_pl < pl1:
        return TransformKind.PR_SC_P
    if sum_bel > bel2 and sum_pl < pl2:
        return TransformKind.PR_BL
    if sum_bel > bel1 and sum_pl < pl3:
        return TransformKind.PR_PL
    return TransformKind.BET_P


def evaluate(
    m: MassFunction,
    t: ThresholdSet,
    decision_threshold: float,
    solver: SolverConfig = SolverConfig(),
) -> DecisionReport:
    """Run the full pipeline: select, transform, score, decide."""
    kind = select_transform(m.sum_bel(), m.sum_pl(), t)
    return report_for(m, kind, decision_threshold, solver)


def report_for(
    m: MassFunction,
    kind: TransformKind,
    decision_threshold: float,
    solver: SolverConfig = SolverConfig(),
) -> DecisionReport:
    """Build a DecisionReport for an explicitly chosen transform."""
    result: TransformResult = apply_transform(kind.value, m, solver)
    return DecisionReport(
        method=kind,
        distribution=result.distribution,
        pic=pic(result.distribution),
        decision_threshold=decision_threshold,
        selected=tuple(decision_set(result.distribution, decision_threshold)),
        epsilon=result.epsilon,
        iterations=result.iterations,
    )
