"""Dimension bounds and probabilistic dimensions for secant moment varieties.

Three upper bounds are implemented for sigma_r of a full-degree model: the
parameter-count bound, the subset-constrained integer program (solved both
greedily and by exhaustive search), and, for hypersimplex strata, a packing
condition that certifies the expected dimension outright.  Lower bounds come
from Jacobian ranks at random prime-field parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb, factorial
from typing import NamedTuple

from .errors import (
    CertificateFailure,
    DegreeOutOfRange,
    PreconditionFailed,
    TooManySubsets,
)
from .exact import DEFAULT_PRIME, rank_mod_p, random_prime
from .model import (
    MixtureParams,
    VarietySpec,
    count_moments,
    jacobian_secant,
)
from .toric import dim_toric, dim_toric_stratum


def _partitions(d: int, max_len: int) -> list[tuple]:
    out: list[tuple] = []

    def rec(rem: int, mx: int, cur: list):
        if rem == 0:
            out.append(tuple(cur))
            return
        if len(cur) == max_len:
            return
        for p in range(min(rem, mx), 0, -1):
            cur.append(p)
            rec(rem - p, p, cur)
            cur.pop()

    rec(d, d, [])
    return out


def _arrangements(parts: tuple, n: int) -> int:
    counts: dict[int, int] = {0: n - len(parts)}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    denom = 1
    for c in counts.values():
        denom *= factorial(c)
    return factorial(n) // denom


@dataclass(frozen=True)
class IlpInstance:
    """Subset-constrained program: maximize sum(c) - 1 over 0 <= c_i <= nr
    with sum_{i in S} c_i bounded by the number of moment coordinates whose
    nonzero part set meets S, for every S contained in {1, ..., d}."""

    n: int
    d: int
    r: int
    rhs: tuple  # indexed by bitmask; bit i-1 represents part size i

    @classmethod
    def build(cls, n: int, d: int, r: int) -> "IlpInstance":
        if d > 20:
            raise TooManySubsets(f"d={d} would need 2^{d} subset constraints")
        weights = [
            (sum(1 << (p - 1) for p in set(parts)), _arrangements(parts, n))
            for parts in _partitions(d, n)
        ]
        rhs = [0] * (1 << d)
        for mask in range(1, 1 << d):
            rhs[mask] = sum(cnt for pm, cnt in weights if pm & mask)
        return cls(n, d, r, tuple(rhs))

    @property
    def cap(self) -> int:
        return self.n * self.r

    def rhs_of(self, subset) -> int:
        mask = 0
        for i in subset:
            if not 1 <= i <= self.d:
                raise ValueError(f"part size {i} out of range")
            mask |= 1 << (i - 1)
        return self.rhs[mask]

    def feasible(self, c) -> bool:
        if len(c) != self.d or any(v < 0 or v > self.cap for v in c):
            return False
        for mask in range(1, 1 << self.d):
            tot = sum(c[i] for i in range(self.d) if (mask >> i) & 1)
            if tot > self.rhs[mask]:
                return False
        return True


def bound_expected(n: int, d: int, r: int) -> int:
    """Parameter-count bound min(rnd - rn + n - 1, C(n+d-1, d) - 1)."""
    if n < 1 or d < 1 or r < 1:
        raise ValueError("need n, d, r >= 1")
    return min(r * n * d - r * n + n - 1, count_moments(n, d) - 1)


class GreedyResult(NamedTuple):
    c: tuple
    value: int


def greedy_ilp(n: int, d: int, r: int) -> GreedyResult:
    """Greedy optimum of the subset-constrained program.

    Starting from c = 0, run r rounds; in each round every coordinate rises
    by at most n, and a coordinate stopping short of +n leaves some subset
    constraint containing it tight.  Coordinates are processed by descending
    part size, which fixes the (provably optimal) output.
    """
    inst = IlpInstance.build(n, d, r)
    masks_with = [
        [m for m in range(1, 1 << d) if (m >> i) & 1] for i in range(d)
    ]
    used = [0] * (1 << d)
    c = [0] * d
    for _ in range(r):
        for i in range(d - 1, -1, -1):
            raise_by = min(
                n, min(inst.rhs[m] - used[m] for m in masks_with[i])
            )
            if raise_by > 0:
                c[i] += raise_by
                for m in masks_with[i]:
                    used[m] += raise_by
    return GreedyResult(tuple(c), sum(c) - 1)


def bound_ilp_exhaustive(n: int, d: int, r: int) -> int:
    """Exact optimum by depth-first search with constraint propagation.

    Branches coordinate by coordinate (descending part size, values high to
    low).  Propagation: at each node every subtree total is bounded by

        min over B of  [ sum_{i in B} u_i  +  sum_{supp(lambda) not in B} w ]

    where u_i is the assigned value (or the tightest remaining slack) of
    coordinate i.  Each B gives a valid bound by splitting any feasible
    completion into its B-part, bounded termwise by u, and its complement,
    bounded by the subset constraint on the complement; subtrees that
    cannot beat the incumbent are pruned.
    """
    if r == 0:
        return -1
    inst = IlpInstance.build(n, d, r)
    rhs = inst.rhs
    cap = inst.cap
    full = (1 << d) - 1
    masks_with = [
        [m for m in range(1, 1 << d) if (m >> i) & 1] for i in range(d)
    ]
    # covered[B] = combined size of the strata whose part set lies inside B,
    # so rhs(complement support) decomposes as rhs(full) - covered[B]
    covered = [0] * (1 << d)
    for parts in _partitions(d, n):
        pm = 0
        for p in set(parts):
            pm |= 1 << (p - 1)
        covered[pm] += _arrangements(parts, n)
    for bit in range(d):
        step = 1 << bit
        for mask in range(1 << d):
            if mask & step:
                covered[mask] += covered[mask ^ step]
    cut_weight = [rhs[full] - covered[mask] for mask in range(1 << d)]
    bit_index = {1 << i: i for i in range(d)}

    order = list(range(d - 1, -1, -1))
    used = [0] * (1 << d)
    u = [0] * d  # per-coordinate value cap: assigned value or remaining slack
    usum = [0] * (1 << d)
    best = -1

    def slack_cap(i: int) -> int:
        return min(cap, min(rhs[m] - used[m] for m in masks_with[i]))

    def dfs(pos: int, total: int):
        nonlocal best
        if pos == d:
            best = max(best, total)
            return
        for i in order[pos:]:
            u[i] = slack_cap(i)
        for mask in range(1, 1 << d):
            low = mask & -mask
            usum[mask] = usum[mask ^ low] + u[bit_index[low]]
        bound = min(usum[mask] + cut_weight[mask] for mask in range(1 << d))
        if bound <= best:
            return
        i = order[pos]
        for v in range(u[i], -1, -1):
            if v:
                for m in masks_with[i]:
                    used[m] += v
            u[i] = v
            dfs(pos + 1, total + v)
            if v:
                for m in masks_with[i]:
                    used[m] -= v
            if bound <= best:
                break  # no child of this node can beat its own bound

    dfs(0, 0)
    return best - 1


@dataclass(frozen=True)
class DualCertificate:
    """Optimality witness: indicator y on the unique maximal saturated set,
    indicator z on coordinates in no saturated set, equal objectives."""

    saturated_set: frozenset
    y: dict
    z: tuple
    objective: int


def certify_greedy(instance: IlpInstance, c) -> DualCertificate:
    """Build and verify the dual certificate for a feasible point c.

    Saturated subsets are closed under union, so there is a unique maximal
    one; y charges it, z charges coordinates avoiding every saturated set.
    Raises CertificateFailure when feasibility, uniqueness, or the
    primal/dual objective match fails (which would mean c is not optimal).
    """
    d, cap, rhs = instance.d, instance.cap, instance.rhs
    c = tuple(c)
    if not instance.feasible(c):
        raise CertificateFailure(f"point {c} is not primal feasible")
    saturated = [
        mask
        for mask in range(1, 1 << d)
        if sum(c[i] for i in range(d) if (mask >> i) & 1) == rhs[mask]
    ]
    union = 0
    for mask in saturated:
        union |= mask
    if saturated and union not in saturated:
        raise CertificateFailure(
            "union of saturated sets is not saturated; no unique maximum"
        )
    s_max = frozenset(
        i + 1 for i in range(d) if (union >> i) & 1
    )
    z = tuple(0 if (union >> i) & 1 else 1 for i in range(d))
    y = {s_max: 1} if saturated else {}
    # dual feasibility: every coordinate covered by z or by the maximal set
    for i in range(d):
        cover = z[i] + (1 if (i + 1) in s_max else 0)
        if cover < 1:
            raise CertificateFailure(f"dual constraint violated at part {i + 1}")
    dual = cap * sum(z) + (rhs[union] if saturated else 0) - 1
    primal = sum(c) - 1
    if dual != primal:
        raise CertificateFailure(
            f"objective gap: primal {primal} vs dual {dual}"
        )
    return DualCertificate(s_max, y, z, primal)


def dim_secant_trials(
    spec: VarietySpec,
    trials: int = 3,
    rng: random.Random | None = None,
    prime: int = DEFAULT_PRIME,
) -> list[int]:
    """Jacobian-rank dimension estimate per trial.

    Trial 0 uses the fixed published prime (or the override); later trials
    draw fresh random 61-bit primes.  Each value is a certified lower bound
    for the dimension and equals it up to a per-trial failure probability
    O(deg/p).
    """
    rng = rng if rng is not None else random.Random(0)
    dims = []
    for t in range(trials):
        p = prime if t == 0 else random_prime(rng)
        params = MixtureParams.random_mod(spec, p, rng)
        dims.append(rank_mod_p(jacobian_secant(spec, params)) - 1)
    return dims


def dim_secant_numeric(
    spec: VarietySpec,
    trials: int = 3,
    rng: random.Random | None = None,
    prime: int = DEFAULT_PRIME,
) -> int:
    """Maximum Jacobian-rank dimension over independent random trials."""
    return max(dim_secant_trials(spec, trials, rng, prime))


def tropical_guarantee(n: int, d: int, r: int) -> bool:
    """Packing condition (1 + d(n-d) + C(d,2) C(n-d,2)) * r <= C(n,d).

    When it holds, sigma_r of the hypersimplex stratum has the expected
    dimension nr - 1.
    """
    if not 1 <= d <= n - 1:
        raise DegreeOutOfRange(f"need 1 <= d <= n-1, got n={n}, d={d}")
    if r < 0:
        raise ValueError("need r >= 0")
    return hamming_ball_size(n, d) * r <= comb(n, d)


def hamming_ball_size(n: int, d: int) -> int:
    """Vertices of the hypersimplex within squared distance 4 of a vertex."""
    return 1 + d * (n - d) + comb(d, 2) * comb(n - d, 2)


def greedy_packing(n: int, d: int, r: int) -> list[tuple]:
    """Greedy vertex packing at pairwise Hamming distance >= 6.

    Repeatedly take the first remaining hypersimplex vertex and discard its
    closed radius-2 ball (Hamming distance <= 4); the packing condition
    guarantees at least r survivors, and every survivor's neighborhood
    affinely spans the full n - 1 dimensions.
    """
    if not tropical_guarantee(n, d, r):
        raise PreconditionFailed(
            f"packing condition fails for (n, d, r) = ({n}, {d}, {r})"
        )
    vertices = []
    for supp in combinations(range(n), d):
        v = [0] * n
        for i in supp:
            v[i] = 1
        vertices.append(tuple(v))
    alive = [True] * len(vertices)
    chosen: list[tuple] = []
    for vi, v in enumerate(vertices):
        if not alive[vi]:
            continue
        chosen.append(v)
        for wi in range(vi, len(vertices)):
            if alive[wi]:
                dist = sum(a != b for a, b in zip(v, vertices[wi]))
                if dist <= 4:
                    alive[wi] = False
    return chosen


def conjecture_sweep(
    kind: str,
    n_range,
    d_range,
    r_range,
    trials: int = 3,
    rng: random.Random | None = None,
    max_jacobian_cols: int = 5000,
) -> list[dict]:
    """Compare numeric secant dimensions against the conjectured values.

    kind 'full' targets the subset-program bound; kind 'hypersimplex'
    targets nr - 1 on strata (1^d) with 3 <= d <= n - 3.  Reports matches,
    never asserts.
    """
    if kind not in ("full", "hypersimplex"):
        raise ValueError("kind must be 'full' or 'hypersimplex'")
    rng = rng if rng is not None else random.Random(0)
    rows = []
    for n in n_range:
        for d in d_range:
            for r in r_range:
                if kind == "hypersimplex":
                    if not 3 <= d <= n - 3:
                        continue
                    spec = VarietySpec.stratum(n, (1,) * d, r=r)
                    target = n * r - 1
                    ilp = None
                    tropical = tropical_guarantee(n, d, r)
                    expected = target
                else:
                    spec = VarietySpec.full_degree(n, d, r=r)
                    ilp = greedy_ilp(n, d, r).value
                    target = ilp
                    tropical = None
                    expected = bound_expected(n, d, r)
                n_cols = spec.n * spec.r * len(spec.parts_in_scope())
                if n_cols > max_jacobian_cols:
                    continue
                dim = dim_secant_numeric(spec, trials, rng)
                rows.append(
                    {
                        "n": n,
                        "d": d,
                        "r": r,
                        "dim_numeric": dim,
                        "ilp_bound": ilp,
                        "expected_bound": expected,
                        "tropical_ok": tropical,
                        "match": dim == target,
                    }
                )
    return rows


def dim_rank_one(spec: VarietySpec) -> int:
    """Closed-form dimension of the r = 1 variety, for consistency checks."""
    if spec.is_stratum:
        return dim_toric_stratum(spec.n, spec.lam)
    return dim_toric(spec.n, spec.d)
