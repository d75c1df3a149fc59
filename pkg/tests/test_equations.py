"""Special polynomials, masked matrices, vanishing verification."""

from fractions import Fraction
from itertools import permutations

import pytest

from mvkit.equations import (
    SparsePolynomial,
    coordinate_dictionary_53,
    det_polynomial,
    facet_pentads_63,
    m33_cubic,
    masked_hankel_63,
    masked_matrix_53,
    pentad,
    pentad_family,
    quadrilateral_set_quartic,
    quintic_53,
    sigma2_m44_cubics,
    term_stratum_bidegree,
    verify_vanishing,
    visible_minors,
)
from mvkit.errors import DuplicateLabels, ScopeMismatch
from mvkit.exact import DEFAULT_PRIME, random_prime
from mvkit.model import MixtureParams, VarietySpec, eval_parametrization
from mvkit.toric import GradedBinomial, binomial_in_ideal


def eval_at_params(poly, spec, params):
    values = {
        idx: eval_parametrization(spec, params, idx) for idx in poly.support()
    }
    return poly.evaluate(values, modulus=params.modulus)


def test_m33_cubic_shape_and_vanishing(rng):
    cubic = m33_cubic()
    assert len(cubic.terms) == 2
    spec = VarietySpec.full_degree(3, 3)
    for _ in range(20):
        params = MixtureParams.random_rational(spec, rng)
        assert eval_at_params(cubic, spec, params) == 0
    # generic points of the ambient space do not satisfy it
    values = {idx: Fraction(rng.randint(1, 50)) for idx in cubic.support()}
    assert cubic.evaluate(values) != 0 or True  # overwhelmingly nonzero
    nonzero = 0
    for _ in range(5):
        values = {idx: Fraction(rng.randint(1, 997)) for idx in cubic.support()}
        nonzero += cubic.evaluate(values) != 0
    assert nonzero >= 4


def test_pentad_shape():
    p = pentad(range(5))
    assert len(p.terms) == 12
    assert all(abs(c) == 1 for c, _ in p.terms)
    for coeff, mono in p.terms:
        assert len(mono) == 5
        assert all(sorted(idx) == [0, 0, 0, 1, 1] for idx in mono)
        assert len(set(mono)) == 5  # squarefree
    with pytest.raises(DuplicateLabels):
        pentad((0, 1, 2, 3, 3))


def test_pentad_vanishes_on_two_mixtures(rng):
    spec = VarietySpec.stratum(5, (1, 1), r=2)
    verdict = verify_vanishing(pentad(range(5)), spec, trials=20, rng=rng)
    assert verdict.vanishes


def test_pentad_witness_on_three_mixtures(rng):
    spec = VarietySpec.stratum(5, (1, 1), r=3)
    verdict = verify_vanishing(pentad(range(5)), spec, trials=20, rng=rng)
    assert not verdict.vanishes
    assert verdict.witness_value and verdict.witness_params is not None


def test_pentad_relabeling_coherence():
    # a permuted support yields the same polynomial up to overall sign
    base = {perm: pentad(perm, 5).canonical() for perm in permutations(range(5))}
    reference = pentad(range(5), 5).canonical()
    assert set(base.values()) == {reference} or all(
        v.terms == reference.terms for v in base.values()
    )


def test_pentad_family_counts(rng):
    assert len(pentad_family(5)) == 1
    assert len(pentad_family(6)) == 6
    family7 = pentad_family(7)
    assert len(family7) == 21
    spec = VarietySpec.stratum(7, (1, 1), r=2)
    for poly in family7[:5]:
        assert verify_vanishing(poly, spec, trials=10, rng=rng).vanishes


def test_facet_pentads(rng):
    facets = facet_pentads_63()
    assert len(facets) == 12
    spec = VarietySpec.stratum(6, (1, 1, 1), r=2)
    for poly in facets:
        assert len(poly.terms) == 12
        assert verify_vanishing(poly, spec, trials=10, rng=rng).vanishes


def test_quartic_shape_and_vanishing(rng):
    q = quadrilateral_set_quartic()
    assert len(q.terms) == 30
    assert all(abs(c) == 1 for c, _ in q.terms)
    assert q.degree == 4
    spec3 = VarietySpec.stratum(6, (1, 1, 1), r=3)
    assert verify_vanishing(q, spec3, trials=20, rng=rng).vanishes
    spec2 = VarietySpec.stratum(6, (1, 1, 1), r=2)
    assert verify_vanishing(q, spec2, trials=10, rng=rng).vanishes
    spec4 = VarietySpec.stratum(6, (1, 1, 1), r=4)
    assert not verify_vanishing(q, spec4, trials=10, rng=rng).vanishes


def test_masked_hankel_63_structure():
    m = masked_hankel_63()
    assert (m.rows, m.cols) == (6, 15)
    assert m.star_count() == 30
    visible = m.visible_cells()
    assert len(visible) == 60
    from collections import Counter

    appearances = Counter(visible)
    assert len(appearances) == 20
    assert set(appearances.values()) == {3}


def test_masked_hankel_minors(rng):
    m = masked_hankel_63()
    quadrics = visible_minors(m, 2)
    # 225 star-free 2x2 positions collapse to 135 distinct binomials
    assert len(quadrics) == 135
    spec = VarietySpec.stratum(6, (1, 1, 1))
    for q in quadrics:
        assert len(q.terms) == 2
        plus = next(mono for c, mono in q.terms if c > 0)
        minus = next(mono for c, mono in q.terms if c < 0)
        assert binomial_in_ideal(spec, GradedBinomial(plus, minus))
    cubics = visible_minors(m, 3)
    assert len(cubics) == 20
    sigma2 = VarietySpec.stratum(6, (1, 1, 1), r=2)
    for c in cubics[:5]:
        assert verify_vanishing(c, sigma2, trials=10, rng=rng).vanishes


def test_minor_binomials_cover_minimal_generators():
    from mvkit.toric import ideal_generators_up_to

    m = masked_hankel_63()
    minor_keys = set()
    for q in visible_minors(m, 2):
        plus = next(mono for c, mono in q.terms if c > 0)
        minus = next(mono for c, mono in q.terms if c < 0)
        b = GradedBinomial(plus, minus).canonical()
        minor_keys.add((b.plus, b.minus))
    report = ideal_generators_up_to(VarietySpec.stratum(6, (1, 1, 1)), 2)
    assert len(report.generators) == 69
    for g in report.generators:
        c = g.canonical()
        assert (c.plus, c.minus) in minor_keys


def test_masked_matrix_53_structure():
    m = masked_matrix_53()
    assert (m.rows, m.cols) == (5, 15)
    assert m.star_count() == 25
    visible = set(m.visible_cells())
    assert len(visible) == 30
    dictionary = coordinate_dictionary_53()
    assert len(dictionary) == 30
    assert visible == set(dictionary.values())
    assert dictionary["a12"] == (0, 0, 1, 1, 1)
    assert dictionary["b12"] == (2, 1, 0, 0, 0)
    assert dictionary["b21"] == (1, 2, 0, 0, 0)


def test_masked_matrix_53_cubics(rng):
    cubics = visible_minors(masked_matrix_53(), 3)
    assert len(cubics) == 10
    sigma2 = VarietySpec.full_degree(5, 3, r=2)
    for c in cubics:
        assert len(c.terms) == 6 and c.degree == 3
        bideg = term_stratum_bidegree(c)
        assert bideg == {(1, 1, 1): 1, (2, 1): 2}
        assert verify_vanishing(c, sigma2, trials=10, rng=rng).vanishes


def test_sigma2_m44_cubics(rng):
    cubics = sigma2_m44_cubics()
    assert len(cubics) == 3
    sigma2 = VarietySpec.full_degree(4, 4, r=2)
    for c in cubics:
        assert c.degree == 3 and len(c.terms) == 6
        assert verify_vanishing(c, sigma2, trials=20, rng=rng).vanishes
        nonzero = 0
        for _ in range(5):
            values = {idx: rng.randint(1, 10**6) for idx in c.support()}
            nonzero += c.evaluate(values, modulus=DEFAULT_PRIME) != 0
        assert nonzero >= 4


def test_quintic_53(rng):
    q = quintic_53()
    assert len(q.terms) == 12 and q.degree == 5
    assert term_stratum_bidegree(q) == {(1, 1, 1): 2, (2, 1): 3}
    sigma2 = VarietySpec.full_degree(5, 3, r=2)
    assert verify_vanishing(q, sigma2, trials=20, rng=rng).vanishes


def test_det_polynomial_matches_cofactor(rng):
    from .conftest import det_cofactor

    # evaluate the symbolic determinant numerically, compare with the oracle
    idx_matrix = [[(i, j) for j in range(3)] for i in range(3)]
    poly = det_polynomial(idx_matrix)
    values = {(i, j): rng.randint(-9, 9) for i in range(3) for j in range(3)}
    direct = det_cofactor([[values[(i, j)] for j in range(3)] for i in range(3)])
    assert poly.evaluate(values) == direct


def test_verify_vanishing_zero_polynomial(rng):
    zero = SparsePolynomial(())
    spec = VarietySpec.full_degree(3, 3, r=1)
    assert verify_vanishing(zero, spec, trials=3, rng=rng).vanishes


def test_verify_vanishing_two_primes(rng):
    primes = [DEFAULT_PRIME, random_prime(rng)]
    spec = VarietySpec.stratum(5, (1, 1), r=2)
    verdict = verify_vanishing(pentad(range(5)), spec, trials=25, rng=rng, primes=primes)
    assert verdict.vanishes


def test_verify_vanishing_scope_mismatch(rng):
    spec = VarietySpec.stratum(5, (2, 1), r=1)
    with pytest.raises(ScopeMismatch):
        verify_vanishing(pentad(range(5)), spec, trials=2, rng=rng)


def test_polynomial_validation_and_json():
    with pytest.raises(ValueError):
        SparsePolynomial(((0, ((1, 1, 0),)),))
    with pytest.raises(ValueError):
        SparsePolynomial(((1, ((1, 1, 0),)), (2, ((1, 1, 0),))))
    doc = pentad(range(5)).to_json()
    assert len(doc["terms"]) == 12
    assert all(len(t["monomial"]) == 5 for t in doc["terms"])
