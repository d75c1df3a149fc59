"""Explicit defining polynomials and masked moment matrices.

Everything here is stored fully expanded: term counts are checkable facts
and evaluation at these sizes is cheap.  Signs follow the standard
alternating-sum convention for minors; the pentad and the quadrilateral-set
quartic are transcribed with their printed signs.  Coordinate labels are
0-based throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import DuplicateLabels, ScopeMismatch
from .exact import DEFAULT_PRIME
from .model import (
    MixtureParams,
    MomentIndex,
    VarietySpec,
    eval_parametrization,
    format_index,
)

Monomial = tuple  # sorted tuple of moment indices


@dataclass(frozen=True)
class SparsePolynomial:
    """Polynomial in moment variables as (coefficient, monomial) terms."""

    terms: tuple

    def __post_init__(self):
        cleaned = []
        seen = set()
        for coeff, mono in self.terms:
            mono = tuple(sorted(tuple(i) for i in mono))
            if coeff == 0:
                raise ValueError("zero coefficient term")
            if mono in seen:
                raise ValueError(f"duplicate monomial {mono}")
            seen.add(mono)
            cleaned.append((coeff, mono))
        object.__setattr__(self, "terms", tuple(cleaned))

    @property
    def degree(self) -> int:
        return max((len(mono) for _, mono in self.terms), default=0)

    def support(self) -> set:
        return {idx for _, mono in self.terms for idx in mono}

    def evaluate(self, values, modulus: int | None = None):
        """Evaluate at an index -> value mapping, exactly or modulo a prime."""
        missing = self.support() - set(values)
        if missing:
            raise ScopeMismatch(
                f"missing values for {sorted(format_index(i) for i in missing)}"
            )
        total = 0
        for coeff, mono in self.terms:
            prod = coeff
            for idx in mono:
                prod = prod * values[idx]
                if modulus is not None:
                    prod %= modulus
            total = total + prod
        return total % modulus if modulus is not None else total

    def canonical(self) -> "SparsePolynomial":
        """Sign-and-order normal form: terms sorted, leading coefficient > 0."""
        terms = sorted(self.terms, key=lambda t: t[1])
        if terms[0][0] < 0:
            terms = [(-c, m) for c, m in terms]
        return SparsePolynomial(tuple(terms))

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "coeff": str(coeff),
                    "monomial": [format_index(i) for i in mono],
                }
                for coeff, mono in sorted(self.terms, key=lambda t: t[1])
            ]
        }


@dataclass(frozen=True)
class MaskedMatrix:
    """Matrix whose cells are moment indices or stars (None)."""

    cells: tuple  # tuple of row tuples
    row_labels: tuple
    col_labels: tuple

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0]) if self.cells else 0

    def star_count(self) -> int:
        return sum(1 for row in self.cells for c in row if c is None)

    def visible_cells(self) -> list:
        return [c for row in self.cells for c in row if c is not None]


def _pair_index(n: int, i: int, j: int) -> MomentIndex:
    idx = [0] * n
    idx[i] = 1
    idx[j] = 1
    return tuple(idx)


def _support_index(n: int, support) -> MomentIndex:
    idx = [0] * n
    for i in support:
        idx[i] = 1
    return tuple(idx)


def m33_cubic() -> SparsePolynomial:
    """The binomial cubic hypersurface equation of the 3x3x3 product model."""
    return SparsePolynomial(
        (
            (1, ((0, 1, 2), (1, 2, 0), (2, 0, 1))),
            (-1, ((0, 2, 1), (2, 1, 0), (1, 0, 2))),
        )
    )


# Twelve terms of the pentad on the off-diagonal second moments of five
# coordinates; pairs refer to positions within the ordered support.
_PENTAD_TERMS = (
    (+1, ((0, 1), (0, 2), (1, 3), (2, 4), (3, 4))),
    (-1, ((0, 1), (0, 2), (1, 4), (2, 3), (3, 4))),
    (-1, ((0, 1), (0, 3), (1, 2), (2, 4), (3, 4))),
    (+1, ((0, 1), (0, 3), (1, 4), (2, 3), (2, 4))),
    (+1, ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))),
    (-1, ((0, 1), (0, 4), (1, 3), (2, 3), (2, 4))),
    (+1, ((0, 2), (0, 3), (1, 2), (1, 4), (3, 4))),
    (-1, ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))),
    (-1, ((0, 2), (0, 4), (1, 2), (1, 3), (3, 4))),
    (+1, ((0, 2), (0, 4), (1, 3), (1, 4), (2, 3))),
    (+1, ((0, 3), (0, 4), (1, 2), (1, 3), (2, 4))),
    (-1, ((0, 3), (0, 4), (1, 2), (1, 4), (2, 3))),
)


def pentad(support, n: int | None = None) -> SparsePolynomial:
    """The 12-term quintic on the pairwise moments of five coordinates."""
    support = tuple(support)
    if len(set(support)) != 5:
        raise DuplicateLabels(f"need 5 distinct labels, got {support}")
    n = n if n is not None else max(support) + 1
    terms = []
    for sign, pairs in _PENTAD_TERMS:
        mono = tuple(
            _pair_index(n, support[a], support[b]) for a, b in pairs
        )
        terms.append((sign, mono))
    return SparsePolynomial(tuple(terms))


def pentad_family(n: int) -> list[SparsePolynomial]:
    """All C(n, 5) pentads on the (1,1)-stratum coordinates."""
    if n < 5:
        raise ValueError("need n >= 5")
    return [pentad(supp, n) for supp in combinations(range(n), 5)]


def facet_pentads_63() -> list[SparsePolynomial]:
    """The 12 pentads induced on the triple moments of six coordinates.

    Each facet of the third hypersimplex on six labels is a copy of the
    second hypersimplex on five labels: six facets fix a label inside every
    triple, six exclude it (triples inside the complement correspond to
    pairs by complementation).
    """
    out = []
    for i in range(6):
        rest = [x for x in range(6) if x != i]
        for sign_set in ("contains", "avoids"):
            terms = []
            for sign, pairs in _PENTAD_TERMS:
                mono = []
                for a, b in pairs:
                    if sign_set == "contains":
                        support = {i, rest[a], rest[b]}
                    else:
                        support = set(rest) - {rest[a], rest[b]}
                    mono.append(_support_index(6, support))
                terms.append((sign, tuple(mono)))
            out.append(SparsePolynomial(tuple(terms)))
    return out


# Quadrilateral-set quartic on the triple moments of six coordinates,
# transcribed with printed signs; labels are 1-based in the source, shifted
# here to 0-based.
_QUARTIC_TERMS_1BASED = (
    (+1, ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))),
    (-1, ((1, 2, 3), (1, 4, 5), (2, 5, 6), (3, 4, 6))),
    (-1, ((1, 2, 3), (1, 4, 6), (2, 4, 5), (3, 5, 6))),
    (+1, ((1, 2, 3), (1, 4, 6), (2, 5, 6), (3, 4, 5))),
    (+1, ((1, 2, 3), (1, 5, 6), (2, 4, 5), (3, 4, 6))),
    (-1, ((1, 2, 3), (1, 5, 6), (2, 4, 6), (3, 4, 5))),
    (-1, ((1, 2, 4), (1, 3, 5), (2, 3, 6), (4, 5, 6))),
    (+1, ((1, 2, 4), (1, 3, 5), (2, 5, 6), (3, 4, 6))),
    (+1, ((1, 2, 4), (1, 3, 6), (2, 3, 5), (4, 5, 6))),
    (-1, ((1, 2, 4), (1, 3, 6), (2, 5, 6), (3, 4, 5))),
    (-1, ((1, 2, 4), (1, 5, 6), (2, 3, 5), (3, 4, 6))),
    (+1, ((1, 2, 4), (1, 5, 6), (2, 3, 6), (3, 4, 5))),
    (+1, ((1, 2, 5), (1, 3, 4), (2, 3, 6), (4, 5, 6))),
    (-1, ((1, 2, 5), (1, 3, 4), (2, 4, 6), (3, 5, 6))),
    (-1, ((1, 2, 5), (1, 3, 6), (2, 3, 4), (4, 5, 6))),
    (+1, ((1, 2, 5), (1, 3, 6), (2, 4, 6), (3, 4, 5))),
    (+1, ((1, 2, 5), (1, 4, 6), (2, 3, 4), (3, 5, 6))),
    (-1, ((1, 2, 5), (1, 4, 6), (2, 3, 6), (3, 4, 5))),
    (-1, ((1, 2, 6), (1, 3, 4), (2, 3, 5), (4, 5, 6))),
    (+1, ((1, 2, 6), (1, 3, 4), (2, 4, 5), (3, 5, 6))),
    (+1, ((1, 2, 6), (1, 3, 5), (2, 3, 4), (4, 5, 6))),
    (-1, ((1, 2, 6), (1, 3, 5), (2, 4, 5), (3, 4, 6))),
    (-1, ((1, 2, 6), (1, 4, 5), (2, 3, 4), (3, 5, 6))),
    (+1, ((1, 2, 6), (1, 4, 5), (2, 3, 5), (3, 4, 6))),
    (+1, ((1, 3, 4), (1, 5, 6), (2, 3, 5), (2, 4, 6))),
    (-1, ((1, 3, 4), (1, 5, 6), (2, 3, 6), (2, 4, 5))),
    (-1, ((1, 3, 5), (1, 4, 6), (2, 3, 4), (2, 5, 6))),
    (+1, ((1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))),
    (+1, ((1, 3, 6), (1, 4, 5), (2, 3, 4), (2, 5, 6))),
    (-1, ((1, 3, 6), (1, 4, 5), (2, 3, 5), (2, 4, 6))),
)


def quadrilateral_set_quartic() -> SparsePolynomial:
    """The 30-term quartic vanishing on 3-component mixtures over Delta(6,3)."""
    terms = []
    for sign, triples in _QUARTIC_TERMS_1BASED:
        mono = tuple(
            _support_index(6, [x - 1 for x in triple]) for triple in triples
        )
        terms.append((sign, mono))
    return SparsePolynomial(tuple(terms))


def masked_hankel_63() -> MaskedMatrix:
    """6 x 15 masked Hankel matrix of the third hypersimplex on six labels.

    Rows are labels i, columns are pairs {j, k}; the cell holds the triple
    moment when the three labels are distinct and a star otherwise.
    """
    pairs = list(combinations(range(6), 2))
    cells = []
    for i in range(6):
        row = []
        for j, k in pairs:
            if i in (j, k):
                row.append(None)
            else:
                row.append(_support_index(6, (i, j, k)))
        cells.append(tuple(row))
    return MaskedMatrix(tuple(cells), tuple(range(6)), tuple(pairs))


def a_coordinate_53(i: int, j: int) -> MomentIndex:
    """a_{ij}: all-ones moment on the complement of {i, j} in five labels."""
    return _support_index(5, set(range(5)) - {i, j})


def b_coordinate_53(j: int, k: int) -> MomentIndex:
    """b_{jk}: square on label j times label k."""
    idx = [0] * 5
    idx[j] = 2
    idx[k] = 1
    return tuple(idx)


def coordinate_dictionary_53() -> dict:
    """Printable a/b labels for the 30 visible moments of the 5 x 15 matrix."""
    out = {}
    for i, j in combinations(range(5), 2):
        out[f"a{i + 1}{j + 1}"] = a_coordinate_53(i, j)
    for j in range(5):
        for k in range(5):
            if j != k:
                out[f"b{j + 1}{k + 1}"] = b_coordinate_53(j, k)
    return out


def masked_matrix_53() -> MaskedMatrix:
    """5 x 15 masked matrix whose star-free 3 x 3 minors cut sigma_2(M(5,3)).

    The first ten columns are labeled by triples T of five labels, with cell
    (k, T) = a_{T minus k} when k lies in T; the last five columns are
    labeled by single labels j, with cell (k, j) = b_{jk} off the diagonal.
    """
    triples = list(combinations(range(5), 3))
    cells = []
    for k in range(5):
        row = []
        for T in triples:
            if k in T:
                i, j = sorted(set(T) - {k})
                row.append(a_coordinate_53(i, j))
            else:
                row.append(None)
        for j in range(5):
            row.append(b_coordinate_53(j, k) if j != k else None)
        cells.append(tuple(row))
    col_labels = tuple(triples) + tuple(range(5))
    return MaskedMatrix(tuple(cells), tuple(range(5)), col_labels)


def det_polynomial(cells) -> SparsePolynomial:
    """Determinant of a small matrix of moment indices, fully expanded."""
    k = len(cells)
    terms = []
    for perm in permutations(range(k)):
        sign = 1
        seen = list(perm)
        for a in range(k):
            for b in range(a + 1, k):
                if seen[a] > seen[b]:
                    sign = -sign
        mono = tuple(cells[row][perm[row]] for row in range(k))
        terms.append((sign, mono))
    # merge repeated monomials (possible when entries repeat)
    merged: dict[tuple, int] = {}
    for sign, mono in terms:
        key = tuple(sorted(mono))
        merged[key] = merged.get(key, 0) + sign
    final = tuple((c, m) for m, c in sorted(merged.items()) if c != 0)
    return SparsePolynomial(final)


def visible_minors(matrix: MaskedMatrix, k: int) -> list[SparsePolynomial]:
    """All k x k minors avoiding stars, deduplicated up to sign.

    Repeated matrix entries can make distinct cell positions carry the same
    polynomial, so minors are canonicalized and deduplicated; identically
    zero minors are dropped.
    """
    if k > min(matrix.rows, matrix.cols):
        raise ValueError(f"no {k} x {k} submatrices in a {matrix.rows} x {matrix.cols} matrix")
    out = []
    seen = set()
    for rows in combinations(range(matrix.rows), k):
        for cols in combinations(range(matrix.cols), k):
            sub = [[matrix.cells[i][j] for j in cols] for i in rows]
            if any(c is None for row in sub for c in row):
                continue
            poly = det_polynomial(sub)
            if not poly.terms:
                continue  # determinant collapsed to zero
            poly = poly.canonical()
            if poly.terms not in seen:
                seen.add(poly.terms)
                out.append(poly)
    return out


def sigma2_m44_cubics() -> list[SparsePolynomial]:
    """The three determinantal cubics vanishing on sigma_2 of the 4x4x4x4 model."""
    blocks = (
        ((2, 2, 0, 0), (2, 1, 1, 0), (2, 0, 2, 0),
         (1, 2, 0, 1), (1, 1, 1, 1), (1, 0, 2, 1),
         (0, 2, 0, 2), (0, 1, 1, 2), (0, 0, 2, 2)),
        ((2, 2, 0, 0), (2, 1, 0, 1), (2, 0, 0, 2),
         (1, 2, 1, 0), (1, 1, 1, 1), (1, 0, 1, 2),
         (0, 2, 2, 0), (0, 1, 2, 1), (0, 0, 2, 2)),
        ((2, 0, 2, 0), (2, 0, 1, 1), (2, 0, 0, 2),
         (1, 1, 2, 0), (1, 1, 1, 1), (1, 1, 0, 2),
         (0, 2, 2, 0), (0, 2, 1, 1), (0, 2, 0, 2)),
    )
    return [
        det_polynomial([list(block[3 * row : 3 * row + 3]) for row in range(3)])
        for block in blocks
    ]


# Sample quintic of bidegree (2, 3) in the a/b coordinates, printed with the
# 5 x 15 matrix; 1-based label pairs.
_QUINTIC_53_TERMS = (
    (+1, (("a", 1, 3), ("a", 4, 5), ("b", 2, 5), ("b", 4, 1), ("b", 5, 3))),
    (-1, (("a", 1, 3), ("a", 4, 5), ("b", 2, 5), ("b", 4, 3), ("b", 5, 1))),
    (-1, (("a", 1, 4), ("a", 3, 4), ("b", 2, 1), ("b", 4, 3), ("b", 5, 4))),
    (+1, (("a", 1, 4), ("a", 3, 4), ("b", 2, 3), ("b", 4, 1), ("b", 5, 4))),
    (-1, (("a", 1, 4), ("a", 3, 5), ("b", 2, 3), ("b", 4, 5), ("b", 5, 1))),
    (+1, (("a", 1, 4), ("a", 3, 5), ("b", 2, 5), ("b", 4, 3), ("b", 5, 1))),
    (+1, (("a", 1, 4), ("a", 4, 5), ("b", 2, 4), ("b", 4, 5), ("b", 5, 1))),
    (-1, (("a", 1, 4), ("a", 4, 5), ("b", 2, 5), ("b", 4, 1), ("b", 5, 4))),
    (+1, (("a", 1, 5), ("a", 3, 4), ("b", 2, 1), ("b", 4, 5), ("b", 5, 3))),
    (-1, (("a", 1, 5), ("a", 3, 4), ("b", 2, 5), ("b", 4, 1), ("b", 5, 3))),
    (-1, (("a", 3, 4), ("a", 4, 5), ("b", 2, 4), ("b", 4, 5), ("b", 5, 3))),
    (+1, (("a", 3, 4), ("a", 4, 5), ("b", 2, 5), ("b", 4, 3), ("b", 5, 4))),
)


def quintic_53() -> SparsePolynomial:
    """A bidegree-(2,3) quintic vanishing on sigma_2(M(5,3))."""
    terms = []
    for sign, factors in _QUINTIC_53_TERMS:
        mono = []
        for kind, x, y in factors:
            if kind == "a":
                mono.append(a_coordinate_53(x - 1, y - 1))
            else:
                mono.append(b_coordinate_53(x - 1, y - 1))
        terms.append((sign, tuple(mono)))
    return SparsePolynomial(tuple(terms))


def stratum_profile(idx: MomentIndex) -> tuple:
    """Nonzero value multiset of an index, identifying its stratum."""
    return tuple(sorted((v for v in idx if v), reverse=True))


def term_stratum_bidegree(poly: SparsePolynomial) -> dict | None:
    """Common per-stratum factor counts of all terms, or None if mixed."""
    profiles = []
    for _, mono in poly.terms:
        counts: dict[tuple, int] = {}
        for idx in mono:
            key = stratum_profile(idx)
            counts[key] = counts.get(key, 0) + 1
        profiles.append(tuple(sorted(counts.items())))
    return dict(profiles[0]) if len(set(profiles)) == 1 else None


@dataclass(frozen=True)
class Verdict:
    """Outcome of a randomized vanishing check."""

    vanishes: bool
    witness_prime: int | None = None
    witness_value: int | None = None
    witness_params: MixtureParams | None = None

    def __bool__(self) -> bool:
        return self.vanishes


def verify_vanishing(
    poly: SparsePolynomial,
    spec: VarietySpec,
    trials: int = 50,
    rng: random.Random | None = None,
    primes=None,
) -> Verdict:
    """Evaluate at random parametrized points over prime fields.

    Returns a vanishing verdict, carrying a witness point when some
    evaluation is nonzero.  The zero polynomial vanishes vacuously.
    """
    if not poly.terms:
        return Verdict(True)
    rng = rng if rng is not None else random.Random(0)
    primes = list(primes) if primes is not None else [DEFAULT_PRIME]
    index_set = set(spec.indices())
    outside = poly.support() - index_set
    if outside:
        raise ScopeMismatch(
            f"polynomial uses non-coordinates {sorted(format_index(i) for i in outside)}"
        )
    support = sorted(poly.support())
    for prime in primes:
        for _ in range(trials):
            params = MixtureParams.random_mod(spec, prime, rng)
            values = {
                idx: eval_parametrization(spec, params, idx) for idx in support
            }
            value = poly.evaluate(values, modulus=prime)
            if value != 0:
                return Verdict(False, prime, value, params)
    return Verdict(True)
