"""Shared test helpers: seeded RNGs and independent oracles."""

from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations

import pytest

from mvkit.model import VarietySpec
from mvkit.toric import GradedBinomial


@pytest.fixture
def rng():
    return random.Random(20240811)


def det_cofactor(rows):
    """Cofactor-expansion determinant, the brute-force oracle."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * det_cofactor(minor)
    return total


def rank_by_permanence(rows):
    """Rank oracle: largest k with a nonsingular k x k submatrix."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    from itertools import combinations

    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det_cofactor(sub) != 0:
                    return k
    return 0


def fiber_excess_under_moves(spec: VarietySpec, degree: int, gens) -> int:
    """Connected-component excess of all graded fibers when only the given
    binomial moves are allowed; zero iff the set generates in this degree."""
    variables = spec.indices()
    var_pos = {v: i for i, v in enumerate(variables)}
    moves = []
    for g in gens:
        if g.degree > degree:
            continue
        plus = Counter(var_pos[i] for i in g.plus)
        minus = Counter(var_pos[i] for i in g.minus)
        moves.append((plus, minus))
        moves.append((minus, plus))
    parts = spec.parts_in_scope()
    row_of = {
        (k, i): k * len(parts) + pos
        for k in range(spec.n)
        for pos, i in enumerate(parts)
    }
    columns = []
    for idx in variables:
        col = [0] * len(row_of)
        for k, ik in enumerate(idx):
            if ik:
                col[row_of[(k, ik)]] = 1
        columns.append(tuple(col))
    fibers: dict[tuple, list[tuple]] = {}
    for mono in combinations_with_replacement(range(len(variables)), degree):
        b = [0] * len(row_of)
        for vi in mono:
            for t, val in enumerate(columns[vi]):
                b[t] += val
        fibers.setdefault(tuple(b), []).append(mono)
    excess = 0
    for monos in fibers.values():
        if len(monos) < 2:
            continue
        pos_of = {m: i for i, m in enumerate(monos)}
        parent = list(range(len(monos)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for mi, mono in enumerate(monos):
            cnt = Counter(mono)
            for plus, minus in moves:
                if all(cnt[v] >= c for v, c in plus.items()):
                    target = cnt - plus + minus
                    tmono = tuple(sorted(target.elements()))
                    ti = pos_of.get(tmono)
                    if ti is not None:
                        ra, rb = find(mi), find(ti)
                        if ra != rb:
                            parent[rb] = ra
        excess += len({find(i) for i in range(len(monos))}) - 1
    return excess


def binomial_orbit(b: GradedBinomial, n: int) -> set:
    """All coordinate-permutation images of a binomial, canonicalized."""
    out = set()
    for perm in permutations(range(n)):
        plus = tuple(sorted(tuple(idx[perm[t]] for t in range(n)) for idx in b.plus))
        minus = tuple(sorted(tuple(idx[perm[t]] for t in range(n)) for idx in b.minus))
        if plus != minus:
            key = (plus, minus) if plus < minus else (minus, plus)
            out.add(key)
    return out
