"""Information-content scoring of probability distributions.

PIC (probability information content) rescales the divergence from the
uniform distribution into [0, 1]: 0 means uniform (no decision
information), 1 means degenerate (total knowledge). Logarithms are
natural; PIC is a ratio of same-base logs, so the base cancels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import FrameMismatchError, UnsupportedDivergenceError
from .transforms import ProbabilityDistribution


@dataclass(frozen=True)
class PicScore:
    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"PIC must lie in [0, 1], got {self.value}")


def pic(p: ProbabilityDistribution) -> PicScore:
    """PIC(p) = 1 + (sum p_i log p_i) / log N, with 0 log 0 := 0.

    A one-element frame carries total knowledge by definition, so N = 1
    returns 1 rather than evaluating the indeterminate 0/0.
    """
    n = p.frame.size
    if n == 1:
        return PicScore(1.0)
    entropy = math.fsum(q * math.log(q) for q in p.probabilities if q > 0.0)
    value = 1.0 + entropy / math.log(n)
    # negligible negative drift from float summation near the uniform case
    return PicScore(min(1.0, max(0.0, value)))


def kl_divergence(p: ProbabilityDistribution, q: ProbabilityDistribution) -> float:
    """Kullback-Leibler divergence D(p || q) in nats.

    Terms with p_i = 0 contribute nothing; p_i > 0 with q_i = 0 makes the
    divergence infinite and is rejected.
    """
    if p.frame != q.frame:
        raise FrameMismatchError("distributions are over different frames")
    total = 0.0
    terms = []
    for pi, qi in zip(p.probabilities, q.probabilities):
        if pi == 0.0:
            continue
        if qi == 0.0:
            raise UnsupportedDivergenceError(
                "p has mass where q has none; divergence is infinite"
            )
        terms.append(pi * math.log(pi / qi))
    total = math.fsum(terms)
    return max(0.0, total)
