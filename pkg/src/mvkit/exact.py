"""Exact dense linear algebra over rationals and prime fields.

Rational ranks and determinants use fraction-free (Bareiss) elimination, so
all intermediate values are integers (minors of the input); prime-field ranks
use ordinary row reduction with modular inverses.  Everything here is exact:
no floating point enters this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import NonSquare

#: Fixed published 61-bit prime (the Mersenne prime 2^61 - 1) used as the
#: default modulus for probabilistic rank computations.
DEFAULT_PRIME = 2**61 - 1

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, which covers moduli < 2^62."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng: random.Random, bits: int = 61) -> int:
    """Random prime with the given bit length."""
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(cand):
            return cand


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix with exact rational entries, row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        for x in self.entries:
            if not isinstance(x, (int, Fraction)):
                raise TypeError(f"inexact entry {x!r}")

    @classmethod
    def from_rows(cls, rows) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(x for r in rows for x in r))

    def at(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_lists(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """Dense matrix over GF(modulus) for an odd prime modulus < 2^62."""

    modulus: int
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if not (2 < self.modulus < 2**62 and is_prime(self.modulus)):
            raise ValueError(f"modulus {self.modulus} is not an odd prime < 2^62")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")
        if any(not (0 <= x < self.modulus) for x in self.entries):
            raise ValueError("entries must be reduced residues")

    @classmethod
    def from_rows(cls, rows, modulus: int) -> "PrimeFieldMatrix":
        rows = [[x % modulus for x in r] for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(modulus, nrows, ncols, tuple(x for r in rows for x in r))

    def to_lists(self) -> list[list[int]]:
        return [
            list(self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        ]


def _integer_rows(matrix: RationalMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators; rank is unchanged."""
    out = []
    for i in range(matrix.rows):
        row = matrix.row(i)
        denoms = [x.denominator for x in row if isinstance(x, Fraction)]
        mult = lcm(*denoms) if denoms else 1
        out.append([int(x * mult) for x in row])
    return out


def _bareiss_rank(rows: list[list[int]]) -> int:
    """Fraction-free elimination with column pivoting; returns the rank."""
    m = len(rows)
    if m == 0 or not rows[0]:
        return 0
    ncols = len(rows[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pivval = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            # Sylvester identity keeps every entry an exact minor of the input.
            row[c + 1 :] = [
                (x * pivval - f * y) // prev
                for x, y in zip(row[c + 1 :], prow[c + 1 :])
            ]
            row[c] = 0
        prev = pivval
        r += 1
        if r == m:
            break
    return r


def rank_rational(matrix: RationalMatrix) -> int:
    """Exact rank via fraction-free Gaussian elimination."""
    return _bareiss_rank(_integer_rows(matrix))


def determinant(matrix: RationalMatrix):
    """Exact determinant via the Bareiss algorithm."""
    if matrix.rows != matrix.cols:
        raise NonSquare(f"matrix is {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    if n == 0:
        return Fraction(1)
    rows = []
    scale = Fraction(1)
    for i in range(n):
        row = matrix.row(i)
        denoms = [x.denominator for x in row if isinstance(x, Fraction)]
        mult = lcm(*denoms) if denoms else 1
        scale *= mult
        rows.append([int(x * mult) for x in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        pivval = rows[c][c]
        for i in range(c + 1, n):
            row = rows[i]
            f = row[c]
            row[c + 1 :] = [
                (x * pivval - f * y) // prev
                for x, y in zip(row[c + 1 :], rows[c][c + 1 :])
            ]
            row[c] = 0
        prev = pivval
    det = Fraction(sign * rows[n - 1][n - 1], 1) / scale
    return det


def nullspace_rational(matrix: RationalMatrix) -> list[tuple]:
    """Basis of the right kernel; its size is cols - rank."""
    m, n = matrix.rows, matrix.cols
    rows = [[Fraction(x) for x in matrix.row(i)] for i in range(m)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for ri, pc in enumerate(pivots):
            vec[pc] = -rows[ri][fc]
        basis.append(tuple(vec))
    return basis


def rank_mod_p(matrix: PrimeFieldMatrix) -> int:
    """Exact rank over GF(p); lower-bounds the rational rank of integer lifts."""
    return _rank_mod(matrix.to_lists(), matrix.modulus)


def _rank_mod(rows: list[list[int]], p: int) -> int:
    m = len(rows)
    if m == 0 or not rows[0]:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        prow[c:] = [x * inv % p for x in prow[c:]]
        for i in range(r + 1, m):
            row = rows[i]
            f = row[c]
            if f:
                row[c:] = [(x - f * y) % p for x, y in zip(row[c:], prow[c:])]
        r += 1
        if r == m:
            break
    return r


def rank_int_probabilistic(rows, rng: random.Random | None = None) -> int:
    """Probabilistic rank of an integer matrix.

    Reduces modulo the fixed published prime plus two fresh random 61-bit
    primes and reports the maximum rank observed; rank loss at a given prime
    is a proper closed condition, so the maximum is almost surely exact.
    """
    rng = rng if rng is not None else random.Random(0)
    rows = [list(r) for r in rows]
    primes = [DEFAULT_PRIME, random_prime(rng), random_prime(rng)]
    return max(_rank_mod([[x % p for x in r] for r in rows], p) for p in primes)
