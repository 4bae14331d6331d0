"""Photon-number distributions and their classical reductions.

The n = 0 members of the two families are exactly the binomial and
negative-binomial states, and with M -> infinity at fixed alpha both
families contract to displaced number states.  This script shows all
three facts numerically.
"""

import math

import numpy as np

from dnstates import (
    Su2Params,
    Su11Params,
    distribution_su2,
    distribution_su11,
    limit_comparison_su2,
    limit_comparison_su11,
)

print("=== su(2), n=0 reduces to the binomial distribution, p = sin^2 r ===")
M, r = 8, 0.7
dist = distribution_su2(Su2Params(M=M, n=0, r=r))
p = math.sin(r) ** 2
print(f"{'m':>3} {'P(m)':>14} {'binomial pmf':>14}")
for m in range(M + 1):
    pmf = math.comb(M, m) * p**m * (1 - p) ** (M - m)
    print(f"{m:>3} {dist.probs[m]:>14.10f} {pmf:>14.10f}")
print("norm defect:", dist.norm_defect)

print()
print("=== su(1,1), n=0 reduces to the negative binomial distribution ===")
M, R = 3, 0.6
dist = distribution_su11(Su11Params(M=M, n=0, R=R))
q = math.tanh(R) ** 2
print(f"{'m':>3} {'P(m)':>14} {'neg-binomial':>14}")
for m in range(8):
    pmf = math.comb(M + m - 1, m) * q**m * (1 - q) ** M
    print(f"{m:>3} {dist.probs[m]:>14.10f} {pmf:>14.10f}")
print(f"window holds {dist.probs.sum():.12f} of the mass over {dist.probs.size} terms")

print()
print("=== seeded states interpolate: n=2 distribution vs displacement ===")
for r in (0.0, 0.4, 0.9):
    probs = distribution_su2(Su2Params(M=10, n=2, r=r)).probs
    print(f"r={r}: P(m) for m=0..6 ->", np.round(probs[:7], 5).tolist())

print()
print("=== contraction limit: total-variation distance to D(alpha)|n> ===")
print(f"{'':>6} {'M=100':>10} {'M=200':>10} {'M=400':>10}")
for n in (0, 1, 2):
    row = [limit_comparison_su2(M, 1.0, 0.0, n) for M in (100, 200, 400)]
    print(f"su2 n={n} " + " ".join(f"{v:>10.6f}" for v in row))
for n in (0, 1, 2):
    row = [limit_comparison_su11(M, 1.0, 0.0, n) for M in (100, 200, 400)]
    print(f"su11 n={n}" + " ".join(f"{v:>10.6f}" for v in row))
print("(halving with M: the families contract onto displaced number states)")
