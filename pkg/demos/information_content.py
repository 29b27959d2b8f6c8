"""How PIC scores the usefulness of a distribution for decision making.

PIC is 0 for the uniform distribution (no basis for a decision), 1 for a
degenerate one (complete certainty), and in between tracks the KL
divergence from uniform, rescaled by log N.
"""

import math

import numpy as np

from pignistic import Frame, ProbabilityDistribution, kl_divergence, pic

frame = Frame(["a", "b", "c", "d"])

examples = [
    ("uniform", [0.25, 0.25, 0.25, 0.25]),
    ("mild preference", [0.40, 0.30, 0.20, 0.10]),
    ("strong preference", [0.70, 0.20, 0.07, 0.03]),
    ("near certainty", [0.97, 0.01, 0.01, 0.01]),
    ("certainty", [1.0, 0.0, 0.0, 0.0]),
]

uniform = ProbabilityDistribution(frame, np.full(4, 0.25))
print(f"{'distribution':<18} {'PIC':>8} {'KL vs uniform':>14}")
for name, probs in examples:
    p = ProbabilityDistribution(frame, probs)
    print(f"{name:<18} {pic(p).value:>8.4f} {kl_divergence(p, uniform):>14.4f}")

# the identity PIC = D(P, U) / log N, demonstrated numerically
p = ProbabilityDistribution(frame, [0.55, 0.25, 0.15, 0.05])
lhs = pic(p).value
rhs = kl_divergence(p, uniform) / math.log(4)
print(f"\nidentity check: PIC={lhs:.12f}  D(P,U)/log N={rhs:.12f}")
