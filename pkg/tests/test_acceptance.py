"""Acceptance criteria, one test per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  All checks are exact except the probabilistic Jacobian ranks,
which are required to agree across all trials.
"""

import random

import numpy as np
import pytest

from mvkit.equations import (
    masked_hankel_63,
    masked_matrix_53,
    pentad,
    quadrilateral_set_quartic,
    quintic_53,
    sigma2_m44_cubics,
    verify_vanishing,
    visible_minors,
)
from mvkit.exact import DEFAULT_PRIME, random_prime
from mvkit.model import (
    MixtureParams,
    Partition,
    VarietySpec,
    eval_parametrization,
    reduce_partition,
)
from mvkit.secant import (
    IlpInstance,
    bound_expected,
    bound_ilp_exhaustive,
    certify_greedy,
    dim_secant_trials,
    greedy_ilp,
    greedy_packing,
    hamming_ball_size,
    tropical_guarantee,
)
from mvkit.stats import hankel_psd
from mvkit.toric import (
    GradedBinomial,
    binomial_in_ideal,
    dim_from_a_matrix,
    dim_toric,
    dim_toric_stratum,
    hypersimplex_degree,
    ideal_generators_up_to,
)

SEED = 20260808


def report(num, name):
    print(f"ACCEPTANCE {num:02d} {name}: PASS")


def test_criterion_01_toric_dimensions():
    full_cases = [(5, 3, 14), (4, 4, 15), (3, 7, 20)]
    for n, d, dim in full_cases:
        assert dim_toric(n, d) == dim
        assert dim_from_a_matrix(VarietySpec.full_degree(n, d)) == dim
    stratum_cases = [
        (5, (1, 1, 1), 4),
        (5, (2, 1), 8),
        (5, (3,), 4),
        (4, (3, 2, 1), 9),
        (5, (4, 3, 2, 1), 16),
    ]
    for n, parts, dim in stratum_cases:
        assert dim_toric_stratum(n, Partition(parts, n)) == dim
        assert dim_from_a_matrix(VarietySpec.stratum(n, parts)) == dim
    report(1, "toric dimensions, formula and rank")


def test_criterion_02_reduction_map():
    r1 = reduce_partition(Partition((8, 5, 5, 4), 4))
    r2 = reduce_partition(Partition((7, 7, 3), 4))
    assert r1.nu == r2.nu == (2, 1, 0, 0)
    assert r1.s == r2.s == 2
    report(2, "reduction map")


def test_criterion_03_hypersimplex_degrees():
    assert hypersimplex_degree(5, 2) == 11
    assert hypersimplex_degree(6, 3) == 66
    report(3, "hypersimplex degrees")


def test_criterion_04_generator_counts():
    cases = [
        (VarietySpec.stratum(6, (1, 1, 1)), 2, {2: 69}),
        (VarietySpec.stratum(4, (3, 2, 1)), 3, {2: 18, 3: 160}),
        (VarietySpec.stratum(4, (2, 1, 1)), 3, {2: 6, 3: 4}),
        (VarietySpec.full_degree(4, 4), 3, {2: 52, 3: 28}),
        (VarietySpec.stratum(5, (2, 1)), 3, {2: 30, 3: 10}),
    ]
    for spec, max_deg, expected in cases:
        assert ideal_generators_up_to(spec, max_deg).counts == expected
    report(4, "minimal generator counts")


@pytest.mark.stretch
def test_criterion_04_stretch_birkhoff5():
    report_b = ideal_generators_up_to(VarietySpec.stratum(5, (4, 3, 2, 1)), 3)
    assert report_b.counts == {2: 1050, 3: 28840}
    report(4, "stretch: Birkhoff n=5 generator counts")


@pytest.mark.stretch
def test_criterion_04_stretch_m37_cubics():
    report_c = ideal_generators_up_to(VarietySpec.full_degree(3, 7), 3)
    assert report_c.counts == {2: 0, 3: 46}
    report(4, "stretch: M(3,7) cubic count")


def test_criterion_05_masked_hankel_cross_check():
    rng = random.Random(SEED)
    hankel = masked_hankel_63()
    minors2 = visible_minors(hankel, 2)
    minor_keys = set()
    for q in minors2:
        plus = next(mono for c, mono in q.terms if c > 0)
        minus = next(mono for c, mono in q.terms if c < 0)
        b = GradedBinomial(plus, minus).canonical()
        minor_keys.add((b.plus, b.minus))
    spec = VarietySpec.stratum(6, (1, 1, 1))
    gens = ideal_generators_up_to(spec, 2).generators
    assert len(gens) == 69
    # the 69 minimal generators all appear among the visible 2x2 minors
    for g in gens:
        c = g.canonical()
        assert (c.plus, c.minus) in minor_keys
    # and every visible minor is a graded binomial of the toric ideal
    for q in minors2:
        plus = next(mono for c, mono in q.terms if c > 0)
        minus = next(mono for c, mono in q.terms if c < 0)
        assert binomial_in_ideal(spec, GradedBinomial(plus, minus))
    primes = [DEFAULT_PRIME, random_prime(rng)]
    sigma2 = VarietySpec.stratum(6, (1, 1, 1), r=2)
    cubics = visible_minors(hankel, 3)
    assert len(cubics) == 20
    for cubic in cubics:
        assert verify_vanishing(cubic, sigma2, trials=50, rng=rng, primes=primes)
    sigma3 = VarietySpec.stratum(6, (1, 1, 1), r=3)
    quartic = quadrilateral_set_quartic()
    assert verify_vanishing(quartic, sigma3, trials=50, rng=rng, primes=primes)
    report(5, "masked Hankel minors vs generators, vanishing checks")


def test_criterion_06_secant_dimensions_by_jacobian():
    rng = random.Random(SEED)
    cases = [
        (VarietySpec.full_degree(5, 3, r=2), 24),
        (VarietySpec.full_degree(4, 4, r=2), 27),
        (VarietySpec.stratum(5, (1, 1), r=2), 8),
    ]
    for spec, expected in cases:
        dims = dim_secant_trials(spec, trials=3, rng=rng)
        assert dims == [expected] * 3, spec.label()
    expected_seq = [47, 91, 135, 175, 215, 255, 291, 327, 363, 399, 431]
    for r, expected in zip(range(1, 12), expected_seq):
        spec = VarietySpec.full_degree(4, 12, r=r)
        dims = dim_secant_trials(spec, trials=3, rng=rng)
        assert dims == [expected] * 3, f"r={r}"
    report(6, "secant dimensions by Jacobian rank")


def test_criterion_07_ilp_machinery():
    for n in range(1, 7):
        for d in range(1, 9):
            inst = IlpInstance.build(n, d, 8)
            for r in range(1, 9):
                result = greedy_ilp(n, d, r)
                assert result.value == bound_ilp_exhaustive(n, d, r), (n, d, r)
                inst_r = IlpInstance.build(n, d, r)
                cert = certify_greedy(inst_r, result.c)
                assert cert.objective == result.value
    expected_seq = [47, 91, 135, 175, 215, 255, 291, 327, 363, 399, 431]
    assert [greedy_ilp(4, 12, r).value for r in range(1, 12)] == expected_seq
    for r in range(1, 12):
        assert bound_expected(4, 12, r) == min(44 * r + 3, 454)
    report(7, "greedy vs exhaustive subset program with certificates")


def test_criterion_08_tropical_guarantee():
    assert tropical_guarantee(20, 3, 2) is True
    assert tropical_guarantee(10, 3, 2) is False
    from itertools import combinations

    from mvkit.exact import RationalMatrix, rank_rational

    for n, d in [(10, 3), (20, 3), (12, 4)]:
        center = tuple(1 if i < d else 0 for i in range(n))
        brute = sum(
            1
            for supp in combinations(range(n), d)
            if sum(
                a != b
                for a, b in zip(center, (1 if i in supp else 0 for i in range(n)))
            )
            <= 4
        )
        assert brute == hamming_ball_size(n, d)
    points = greedy_packing(20, 3, 2)
    assert len(points) >= 2
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            assert sum(a != b for a, b in zip(p, q)) >= 6
    n, d = 20, 3
    for center in points:
        nbrs = [center]
        for supp in combinations(range(n), d):
            v = tuple(1 if i in supp else 0 for i in range(n))
            if 0 < sum(a != b for a, b in zip(center, v)) <= 2:
                nbrs.append(v)
        diffs = [[x - y for x, y in zip(v, nbrs[0])] for v in nbrs[1:]]
        assert rank_rational(RationalMatrix.from_rows(diffs)) == n - 1
    report(8, "tropical packing guarantee")


def test_criterion_09_vanishing_in_place_of_degrees():
    rng = random.Random(SEED)
    primes = [DEFAULT_PRIME, random_prime(rng)]
    sigma2_53 = VarietySpec.full_degree(5, 3, r=2)
    cubics_53 = visible_minors(masked_matrix_53(), 3)
    assert len(cubics_53) == 10
    for cubic in cubics_53:
        assert verify_vanishing(cubic, sigma2_53, trials=50, rng=rng, primes=primes)
    sigma2_44 = VarietySpec.full_degree(4, 4, r=2)
    for cubic in sigma2_m44_cubics():
        assert verify_vanishing(cubic, sigma2_44, trials=50, rng=rng, primes=primes)
    assert verify_vanishing(quintic_53(), sigma2_53, trials=50, rng=rng, primes=primes)
    report(9, "vanishing checks standing in for degree computations")


def test_criterion_10_statistics_pipeline():
    rng = random.Random(SEED)
    poly = pentad(range(5))
    spec2 = VarietySpec.stratum(5, (1, 1), r=2)
    params2 = MixtureParams.random_rational(spec2, rng)
    values2 = {
        idx: eval_parametrization(spec2, params2, idx) for idx in spec2.indices()
    }
    assert poly.evaluate(values2) == 0
    spec3 = VarietySpec.stratum(5, (1, 1), r=3)
    params3 = MixtureParams.random_rational(spec3, rng)
    values3 = {
        idx: eval_parametrization(spec3, params3, idx) for idx in spec3.indices()
    }
    assert poly.evaluate(values3) != 0
    # exact Bernoulli(1/2) moments realize; the crafted sequence cannot
    assert hankel_psd([1.0, 0.5, 0.5], 1) is True
    assert hankel_psd([1.0, 0.0, -1.0], 1) is False
    assert hankel_psd([1.0, 0.0, -1.0, 0.0, 1.0], 2) is False
    from mvkit.stats import SampleMatrix, hamburger_check

    assert hamburger_check(SampleMatrix(np.array([[0.0], [1.0]])), 1) == [True]
    report(10, "statistics pipeline")
