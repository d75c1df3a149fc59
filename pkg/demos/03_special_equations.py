#!/usr/bin/env python3
"""The explicit equations: pentad, quadrilateral-set quartic, masked minors.

Every polynomial is checked by evaluating at random points of the mixture
parametrization over a large prime field; membership in the right secant
ideal shows up as identically zero values.
"""

import random

from mvkit import (
    VarietySpec,
    m33_cubic,
    masked_hankel_63,
    masked_matrix_53,
    pentad,
    quadrilateral_set_quartic,
    quintic_53,
    sigma2_m44_cubics,
    verify_vanishing,
    visible_minors,
)

rng = random.Random(0)


def check(name, poly, spec, trials=30):
    verdict = verify_vanishing(poly, spec, trials=trials, rng=rng)
    state = "vanishes" if verdict.vanishes else "does NOT vanish"
    print(f"{name}: {len(poly.terms)} terms, degree {poly.degree}; {state} on {spec.label()}")


print("== the cubic hypersurface of the 3x3x3 product model ==")
check("cubic", m33_cubic(), VarietySpec.full_degree(3, 3))

print()
print("== the pentad on pairwise moments of five coordinates ==")
check("pentad", pentad(range(5)), VarietySpec.stratum(5, (1, 1), r=2))
check("pentad", pentad(range(5)), VarietySpec.stratum(5, (1, 1), r=3), trials=5)

print()
print("== the quadrilateral-set quartic on triple moments ==")
check("quartic", quadrilateral_set_quartic(), VarietySpec.stratum(6, (1, 1, 1), r=3))

print()
print("== masked Hankel matrix for triples of six coordinates ==")
hankel = masked_hankel_63()
print(f"shape {hankel.rows}x{hankel.cols}, stars {hankel.star_count()}")
print(f"distinct visible 2x2 minors: {len(visible_minors(hankel, 2))}")
cubics = visible_minors(hankel, 3)
print(f"star-free 3x3 minors: {len(cubics)}")
check("first 3x3 minor", cubics[0], VarietySpec.stratum(6, (1, 1, 1), r=2))

print()
print("== the 5x15 masked matrix behind sigma_2 of the degree-3 model ==")
m53 = masked_matrix_53()
print(f"shape {m53.rows}x{m53.cols}, stars {m53.star_count()}")
cubics53 = visible_minors(m53, 3)
print(f"star-free 3x3 minors: {len(cubics53)}")
check("first cubic", cubics53[0], VarietySpec.full_degree(5, 3, r=2))
check("sample quintic", quintic_53(), VarietySpec.full_degree(5, 3, r=2))

print()
print("== the three determinantal cubics for 4x4x4x4 two-mixtures ==")
for i, cubic in enumerate(sigma2_m44_cubics(), start=1):
    check(f"cubic {i}", cubic, VarietySpec.full_degree(4, 4, r=2))
