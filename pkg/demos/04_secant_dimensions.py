#!/usr/bin/env python3
"""Secant dimensions: Jacobian ranks against three upper bounds.

The parameter-count bound is loose once the mixture rank passes the number
of coordinates; the subset-constrained integer program is conjecturally
tight, and a packing condition certifies hypersimplex strata outright.
"""

import random

from mvkit import (
    VarietySpec,
    bound_expected,
    bound_ilp_exhaustive,
    certify_greedy,
    dim_secant_numeric,
    greedy_ilp,
    greedy_packing,
    hamming_ball_size,
    tropical_guarantee,
)
from mvkit.secant import IlpInstance

rng = random.Random(0)

print("== mixtures of the degree-12 model on four coordinates ==")
print(" r  greedy  exhaustive  parameter-count")
for r in range(1, 12):
    g = greedy_ilp(4, 12, r).value
    e = bound_ilp_exhaustive(4, 12, r)
    b = bound_expected(4, 12, r)
    print(f"{r:2d}  {g:6d}  {e:10d}  {b:15d}")

print()
print("== optimality certificate for r = 4 ==")
result = greedy_ilp(4, 12, 4)
cert = certify_greedy(IlpInstance.build(4, 12, 4), result.c)
print(f"greedy point c = {result.c}")
print(f"maximal saturated part set: {sorted(cert.saturated_set)}")
print(f"primal = dual objective = {cert.objective}")

print()
print("== probabilistic dimensions by Jacobian rank ==")
for spec, note in [
    (VarietySpec.full_degree(5, 3, r=2), "drop below 2*14+1 caused by the pure-power cone"),
    (VarietySpec.full_degree(4, 4, r=2), ""),
    (VarietySpec.stratum(5, (1, 1), r=2), "the pentad hypersurface"),
]:
    dim = dim_secant_numeric(spec, trials=3, rng=rng)
    suffix = f"  # {note}" if note else ""
    print(f"dim {spec.label()} = {dim}{suffix}")

print()
print("== tropical packing guarantee for hypersimplex strata ==")
for n, d, r in [(20, 3, 2), (10, 3, 2), (12, 4, 2)]:
    ok = tropical_guarantee(n, d, r)
    print(f"(n,d,r)=({n},{d},{r}): ball {hamming_ball_size(n, d)}, guaranteed: {ok}")

points = greedy_packing(20, 3, 2)
dists = {
    sum(a != b for a, b in zip(p, q))
    for i, p in enumerate(points)
    for q in points[i + 1 :]
}
print(f"greedy packing on (20,3) picked {len(points)} vertices, min distance {min(dists)}")
