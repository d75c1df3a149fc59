#!/usr/bin/env python3
"""Dimensions of product-moment varieties, two ways.

Each variety is cut out by a squarefree monomial parametrization; its
dimension comes from a closed formula and is confirmed here by the exact
rank of the 0-1 exponent matrix.
"""

from mvkit import (
    Partition,
    VarietySpec,
    build_a_matrix,
    dim_from_a_matrix,
    dim_toric,
    dim_toric_stratum,
    hypersimplex_degree,
    rank_rational,
    reduce_partition,
)

print("== full-degree models ==")
for n, d in [(3, 3), (5, 3), (4, 4), (3, 7)]:
    spec = VarietySpec.full_degree(n, d)
    a = build_a_matrix(spec)
    print(
        f"M({n},{d}): ambient P^{a.cols - 1}, exponent matrix {a.rows}x{a.cols}, "
        f"dim = {dim_toric(n, d)} (rank check {rank_rational(a) - 1})"
    )

print()
print("== strata ==")
for n, parts in [(5, (1, 1, 1)), (5, (2, 1)), (5, (3,)), (4, (3, 2, 1)), (5, (4, 3, 2, 1))]:
    spec = VarietySpec.stratum(n, parts)
    lam = Partition(parts, n)
    print(
        f"{spec.label()}: dim = {dim_toric_stratum(n, lam)} "
        f"(rank check {dim_from_a_matrix(spec)})"
    )

print()
print("== reductions: different part values, same variety ==")
for n, parts in [(4, (8, 5, 5, 4)), (4, (7, 7, 3)), (5, (1, 1, 1))]:
    red = reduce_partition(Partition(parts, n))
    print(f"lambda = {parts} (n={n})  ->  nu = {red.nu}, levels s = {red.s}")

print()
print("== hypersimplex degrees (normalized volumes) ==")
for n, d in [(5, 2), (6, 3), (7, 3), (8, 4)]:
    print(f"deg M({n},(1^{d})) = {hypersimplex_degree(n, d)}")
