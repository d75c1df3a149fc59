"""Combinatorial data model for moment varieties of product mixtures.

Moment coordinates are labeled by exponent vectors (i_1, ..., i_n) with
i_1 + ... + i_n = d.  A full-degree model uses all of them; a stratum model
keeps only those whose nonzero entries form a prescribed partition of d.
The canonical coordinate order everywhere is graded reverse-lexicographic
on exponent vectors.

The rank-one parametrization sends the coordinate (i_1, ..., i_n) to the
monomial mu_{1,i_1} * ... * mu_{n,i_n} with mu_{k,0} = 1; mixtures sum r
independent copies.  The map is d-to-1 already for r = 1 (scaling mu_{k,i}
by omega^i for a d-th root of unity omega fixes every moment), so mixture
fibers have size at least r! * d^r; degree computations, which would need a
birational slice, are out of scope here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import IndexOutOfStratum, PartitionTooLong
from .exact import PrimeFieldMatrix, RationalMatrix

MomentIndex = tuple  # exponent vector (i_1, ..., i_n)


def grevlex_key(index: MomentIndex) -> tuple:
    """Sort key putting same-degree exponent vectors in grevlex order."""
    return tuple(reversed(index))


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts inside an ambient dimension n."""

    parts: tuple
    n: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if len(parts) > self.n:
            raise PartitionTooLong(f"{len(parts)} parts exceed n={self.n}")

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def padded(self) -> tuple:
        return self.parts + (0,) * (self.n - len(self.parts))

    def distinct_parts(self) -> tuple:
        return tuple(sorted(set(self.parts), reverse=True))


@dataclass(frozen=True)
class Reduction:
    """Relabeling of a partition's values by multiplicity levels 0..s."""

    nu: tuple
    s: int
    multiplicities: tuple  # k_0 >= k_1 >= ... >= k_s, summing to n
    level_by_part: tuple  # pairs (original part, level), parts include 0

    def as_partition(self, n: int | None = None) -> Partition:
        n = n if n is not None else len(self.nu)
        parts = tuple(v for v in self.nu if v > 0)
        return Partition(parts, n)


def reduce_partition(lam: Partition) -> Reduction:
    """Canonical reduction: distinct values ranked by descending multiplicity.

    Ties between multiplicities are broken by giving the smaller original
    part the lower level; the resulting variety does not depend on the
    tie-break, only the labeling does.
    """
    padded = lam.padded()
    mult: dict[int, int] = {}
    for v in padded:
        mult[v] = mult.get(v, 0) + 1
    ordered = sorted(mult, key=lambda v: (-mult[v], v))
    s = len(ordered) - 1
    level = {v: i for i, v in enumerate(ordered)}
    ks = tuple(mult[v] for v in ordered)
    nu = []
    for lvl in range(s, 0, -1):
        nu.extend([lvl] * ks[lvl])
    nu.extend([0] * ks[0])
    return Reduction(tuple(nu), s, ks, tuple(sorted(level.items())))


@lru_cache(maxsize=None)
def enumerate_moments(n: int, d: int) -> tuple:
    """All C(n+d-1, d) exponent vectors of degree d, grevlex order."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    out: list[tuple] = []

    def rec(prefix: list, rem: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix) + (rem,))
            return
        for v in range(rem + 1):
            prefix.append(v)
            rec(prefix, rem - v, slots - 1)
            prefix.pop()

    rec([], d, n)
    out.sort(key=grevlex_key)
    return tuple(out)


def _distinct_permutations(values: tuple) -> list[tuple]:
    counts: dict[int, int] = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    keys = sorted(counts, reverse=True)
    n = len(values)
    cur = [0] * n
    out: list[tuple] = []

    def rec(pos: int):
        if pos == n:
            out.append(tuple(cur))
            return
        for v in keys:
            if counts[v]:
                counts[v] -= 1
                cur[pos] = v
                rec(pos + 1)
                counts[v] += 1

    rec(0)
    return out


def stratum_size(lam: Partition) -> int:
    """|N_lambda| = n! / (k_0! k_1! ... k_s!)."""
    red = reduce_partition(lam)
    denom = 1
    for k in red.multiplicities:
        denom *= factorial(k)
    return factorial(lam.n) // denom


def enumerate_stratum(n: int, lam: Partition) -> tuple:
    """All arrangements of the padded partition, grevlex order."""
    if lam.n != n:
        lam = Partition(lam.parts, n)
    out = _distinct_permutations(lam.padded())
    out.sort(key=grevlex_key)
    return tuple(out)


@dataclass(frozen=True)
class VarietySpec:
    """A moment variety: full degree d or one stratum, plus a mixture rank."""

    n: int
    r: int = 1
    d: int | None = None
    lam: Partition | None = None

    def __post_init__(self):
        if (self.d is None) == (self.lam is None):
            raise ValueError("exactly one of d, lam must be given")
        if self.n < 1 or self.r < 1:
            raise ValueError("need n >= 1 and r >= 1")
        if self.lam is not None and self.lam.n != self.n:
            object.__setattr__(self, "lam", Partition(self.lam.parts, self.n))

    @classmethod
    def full_degree(cls, n: int, d: int, r: int = 1) -> "VarietySpec":
        return cls(n=n, r=r, d=d)

    @classmethod
    def stratum(cls, n: int, parts, r: int = 1) -> "VarietySpec":
        return cls(n=n, r=r, lam=Partition(tuple(parts), n))

    @property
    def degree_total(self) -> int:
        return self.d if self.d is not None else self.lam.d

    @property
    def is_stratum(self) -> bool:
        return self.lam is not None

    def indices(self) -> tuple:
        if self.lam is not None:
            return enumerate_stratum(self.n, self.lam)
        return enumerate_moments(self.n, self.d)

    def parts_in_scope(self) -> tuple:
        """Degrees i for which mu_{k,i} is a free parameter."""
        if self.lam is not None:
            return self.lam.distinct_parts()
        return tuple(range(self.d, 0, -1))

    def label(self) -> str:
        core = (
            f"M({self.n},{format_index(self.lam.parts)})"
            if self.lam is not None
            else f"M({self.n},{self.d})"
        )
        return core if self.r == 1 else f"sigma_{self.r}({core})"


@dataclass(frozen=True)
class MixtureParams:
    """Values mu^(j)_{k,i} for j < r, k < n, i in the parameter scope.

    mu^(j)_{k,0} is hard-wired to 1.  Entries are exact rationals when
    modulus is None and reduced residues otherwise.
    """

    n: int
    r: int
    parts: tuple
    values: dict = field(compare=False)
    modulus: int | None = None

    def get(self, j: int, k: int, i: int):
        if i == 0:
            return 1
        return self.values[(j, k, i)]

    @classmethod
    def random_mod(
        cls, spec: VarietySpec, prime: int, rng: random.Random
    ) -> "MixtureParams":
        """Uniform nonzero residues modulo a prime."""
        parts = spec.parts_in_scope()
        values = {
            (j, k, i): rng.randrange(1, prime)
            for j in range(spec.r)
            for k in range(spec.n)
            for i in parts
        }
        return cls(spec.n, spec.r, parts, values, prime)

    @classmethod
    def random_rational(
        cls, spec: VarietySpec, rng: random.Random, bound: int = 9
    ) -> "MixtureParams":
        """Small random nonzero rationals, for exact evaluations."""
        parts = spec.parts_in_scope()

        def draw() -> Fraction:
            num = rng.choice([x for x in range(-bound, bound + 1) if x != 0])
            return Fraction(num, rng.randint(1, bound))

        values = {
            (j, k, i): draw()
            for j in range(spec.r)
            for k in range(spec.n)
            for i in parts
        }
        return cls(spec.n, spec.r, parts, values, None)

    def component(self, j: int) -> "MixtureParams":
        """The rank-one slice for mixture component j."""
        values = {
            (0, k, i): v for (jj, k, i), v in self.values.items() if jj == j
        }
        return MixtureParams(self.n, 1, self.parts, values, self.modulus)


def _check_index(spec: VarietySpec, idx: MomentIndex):
    if len(idx) != spec.n or any(v < 0 for v in idx):
        raise IndexOutOfStratum(f"{idx} is not an index on {spec.n} coordinates")
    if sum(idx) != spec.degree_total:
        raise IndexOutOfStratum(f"{idx} has degree {sum(idx)}, expected {spec.degree_total}")
    if spec.lam is not None:
        if tuple(sorted((v for v in idx if v), reverse=True)) != spec.lam.parts:
            raise IndexOutOfStratum(f"{idx} is not in the {spec.lam.parts} stratum")


def eval_parametrization(spec: VarietySpec, params: MixtureParams, idx: MomentIndex):
    """Exact value of sum_j prod_k mu^(j)_{k, i_k} at one moment index."""
    _check_index(spec, idx)
    p = params.modulus
    total = 0
    for j in range(spec.r):
        prod = 1
        for k, ik in enumerate(idx):
            if ik:
                prod = prod * params.get(j, k, ik)
                if p is not None:
                    prod %= p
        total = total + prod
    return total % p if p is not None else total


def moment_vector(spec: VarietySpec, params: MixtureParams) -> dict:
    """All moment coordinates of the parametrized point, keyed by index."""
    return {idx: eval_parametrization(spec, params, idx) for idx in spec.indices()}


def build_a_matrix(spec: VarietySpec) -> RationalMatrix:
    """0-1 exponent matrix of the rank-one parametrization.

    Rows are the parameters mu_{k,i} (k major, i as in parts_in_scope); the
    column for index (i_1, ..., i_n) has a 1 in row (k, i_k) whenever i_k > 0.
    """
    if spec.r != 1:
        raise ValueError("the exponent matrix is defined for r = 1")
    parts = spec.parts_in_scope()
    row_of = {
        (k, i): k * len(parts) + pos
        for k in range(spec.n)
        for pos, i in enumerate(parts)
    }
    indices = spec.indices()
    nrows = len(row_of)
    rows = [[0] * len(indices) for _ in range(nrows)]
    for col, idx in enumerate(indices):
        for k, ik in enumerate(idx):
            if ik:
                rows[row_of[(k, ik)]][col] = 1
    return RationalMatrix.from_rows(rows)


def jacobian_columns(spec: VarietySpec) -> tuple:
    """Column labels (i, k, j), grouped by parameter degree i."""
    return tuple(
        (i, k, j)
        for i in sorted(spec.parts_in_scope())
        for k in range(spec.n)
        for j in range(spec.r)
    )


def jacobian_secant(spec: VarietySpec, params: MixtureParams):
    """Differential of the mixture parametrization at the given parameters.

    Rows follow the canonical moment order; the entry in row (i_1, ..., i_n)
    and column (i, k, j) is [i_k == i] * prod_{l != k} mu^(j)_{l, i_l}.
    """
    indices = spec.indices()
    cols = jacobian_columns(spec)
    p = params.modulus
    rows = []
    for idx in indices:
        row = [0] * len(cols)
        for ci, (i, k, j) in enumerate(cols):
            if idx[k] == i:
                prod = 1
                for l, il in enumerate(idx):
                    if l != k and il:
                        prod = prod * params.get(j, l, il)
                        if p is not None:
                            prod %= p
                row[ci] = prod % p if p is not None else prod
        rows.append(row)
    if p is not None:
        return PrimeFieldMatrix.from_rows(rows, p)
    return RationalMatrix.from_rows(rows)


def format_index(idx) -> str:
    """Digit string when all entries are single digits, comma-joined otherwise."""
    if all(0 <= v <= 9 for v in idx):
        return "".join(str(v) for v in idx)
    return ",".join(str(v) for v in idx)


def parse_index(text: str) -> tuple:
    if "," in text:
        return tuple(int(v) for v in text.split(","))
    return tuple(int(ch) for ch in text)


def count_moments(n: int, d: int) -> int:
    return comb(n + d - 1, d)
