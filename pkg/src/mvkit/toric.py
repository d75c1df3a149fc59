"""Dimensions, degrees and binomial generators of the toric moment varieties.

The toric ideal of a monomial parametrization is spanned by differences of
monomials with equal exponent-matrix degree.  Minimal generators are counted
degree by degree: within each graded fiber, two monomials are connected when
they share a variable (equivalently, when a previously emitted generator
moves one to the other), and each fiber contributes one new generator per
excess connected component.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from math import comb

from .errors import (
    DegreeOutOfRange,
    FiberCapExceeded,
    MatchingFailure,
    NotInIdeal,
)
from .exact import rank_rational
from .model import (
    Partition,
    VarietySpec,
    build_a_matrix,
    count_moments,
    format_index,
    reduce_partition,
)

#: Degrees of a few moment varieties, recorded from volume and numerical
#: computations elsewhere; none of these are recomputed by this toolkit.
KNOWN_DEGREES = {
    "M(4,321)": 352,
    "M(5,4321)": 4718075,
    "M(4,4)": 1072,
    "M(3,7)": 14922,
    "sigma_2(M(5,3))": 3225,
    "sigma_2(M(4,4))": 8650,
    "sigma_2(M(6,111))": 465,
    "sigma_3(M(6,111))": 80,
}


@dataclass(frozen=True)
class GradedBinomial:
    """Difference of two same-degree monomials in moment variables.

    Monomials are stored as sorted tuples of moment indices; a binomial lies
    in a toric ideal when both monomials have the same exponent-matrix degree.
    """

    plus: tuple
    minus: tuple

    def __post_init__(self):
        object.__setattr__(self, "plus", tuple(sorted(self.plus)))
        object.__setattr__(self, "minus", tuple(sorted(self.minus)))
        if len(self.plus) != len(self.minus):
            raise ValueError("monomials must have equal degree")
        if self.plus == self.minus:
            raise ValueError("binomial must have distinct monomials")

    @property
    def degree(self) -> int:
        return len(self.plus)

    def canonical(self) -> "GradedBinomial":
        """Orientation-free representative: smaller monomial first."""
        if self.minus < self.plus:
            return GradedBinomial(self.minus, self.plus)
        return self

    def to_json(self) -> dict:
        return {
            "plus": [format_index(i) for i in self.plus],
            "minus": [format_index(i) for i in self.minus],
        }


@dataclass(frozen=True)
class GeneratorReport:
    """Minimal generators of a toric ideal up to a degree bound."""

    variety: str
    max_degree: int
    counts: dict
    generators: tuple

    def to_json(self) -> dict:
        return {
            "variety": self.variety,
            "max_degree": self.max_degree,
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "generators": [g.to_json() for g in self.generators],
        }


def dim_toric(n: int, d: int) -> int:
    """dim M_{n,d} = min(nd - 1, C(n+d-1, d) - 1)."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    return min(n * d - 1, count_moments(n, d) - 1)


def dim_toric_stratum(n: int, lam: Partition) -> int:
    """dim M_{n,lambda} = (n - 1) * s for the reduction level count s."""
    if lam.n != n:
        lam = Partition(lam.parts, n)
    return (n - 1) * reduce_partition(lam).s


def dim_from_a_matrix(spec: VarietySpec) -> int:
    """Dimension as exact exponent-matrix rank minus one (cross-check route)."""
    return rank_rational(build_a_matrix(spec)) - 1


def eulerian(n: int, k: int) -> int:
    """Number of permutations of [n] with exactly k descents."""
    if k < 0 or k >= max(n, 1):
        return 1 if (n == 0 and k == 0) else 0
    row = [1]
    for m in range(1, n + 1):
        row = [
            (j + 1) * (row[j] if j < len(row) else 0)
            + (m - j) * (row[j - 1] if 0 <= j - 1 < len(row) else 0)
            for j in range(m)
        ]
    return row[k]


def hypersimplex_degree(n: int, d: int) -> int:
    """Degree of the hypersimplex variety M_{n,(1^d)}.

    Equals the normalized volume of the polytope, an Eulerian number; the
    indexing is calibrated so that (n, d) = (5, 2) gives 11 and (6, 3)
    gives 66, i.e. permutations of n - 1 letters with d - 1 descents.
    """
    if not 1 <= d <= n - 1:
        raise DegreeOutOfRange(f"need 1 <= d <= n-1, got n={n}, d={d}")
    return eulerian(n - 1, d - 1)


def binomial_in_ideal(spec: VarietySpec, b: GradedBinomial) -> bool:
    """Graded membership: per-slot value multisets of both sides coincide."""
    index_set = set(spec.indices())
    for mono in (b.plus, b.minus):
        for idx in mono:
            if idx not in index_set:
                raise NotInIdeal(f"index {format_index(idx)} not a coordinate of {spec.label()}")
    n = spec.n
    for k in range(n):
        left = sorted(idx[k] for idx in b.plus)
        right = sorted(idx[k] for idx in b.minus)
        if left != right:
            return False
    return True


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def ideal_generators_up_to(
    spec: VarietySpec,
    max_degree: int | None = None,
    fiber_cap: int = 10**7,
) -> GeneratorReport:
    """Minimal binomial generators of the toric ideal, degree by degree.

    Strata are generated in degree at most 3, so max_degree defaults to 3
    there; full-degree models can need higher degrees and require an
    explicit bound.  Counts per degree equal the minimal generator numbers
    of the ideal (graded Nakayama over the exponent grading).
    """
    if spec.r != 1:
        raise ValueError("generators are computed for the toric case r = 1")
    if max_degree is None:
        if spec.is_stratum:
            max_degree = 3
        else:
            raise ValueError("full-degree models need an explicit max_degree")
    variables = spec.indices()
    nvars = len(variables)
    parts = spec.parts_in_scope()
    row_of = {
        (k, i): k * len(parts) + pos
        for k in range(spec.n)
        for pos, i in enumerate(parts)
    }
    nrows = len(row_of)
    columns = []
    for idx in variables:
        col = [0] * nrows
        for k, ik in enumerate(idx):
            if ik:
                col[row_of[(k, ik)]] = 1
        columns.append(tuple(col))

    counts: dict[int, int] = {}
    generators: list[GradedBinomial] = []
    for deg in range(2, max_degree + 1):
        n_monos = comb(nvars + deg - 1, deg)
        if n_monos > fiber_cap:
            raise FiberCapExceeded(deg, n_monos, fiber_cap)
        fibers: dict[tuple, list[tuple]] = {}
        for mono in combinations_with_replacement(range(nvars), deg):
            b = [0] * nrows
            for vi in mono:
                col = columns[vi]
                for t in range(nrows):
                    b[t] += col[t]
            fibers.setdefault(tuple(b), []).append(mono)
        emitted = 0
        for monos in fibers.values():
            if len(monos) < 2:
                continue
            uf = _UnionFind(len(monos))
            first_with: dict[int, int] = {}
            for mi, mono in enumerate(monos):
                for v in set(mono):
                    if v in first_with:
                        uf.union(first_with[v], mi)
                    else:
                        first_with[v] = mi
            # one representative per component: its lexicographically
            # smallest monomial (combinations_with_replacement is lex-sorted)
            rep: dict[int, int] = {}
            for mi in range(len(monos)):
                root = uf.find(mi)
                if root not in rep or monos[mi] < monos[rep[root]]:
                    rep[root] = mi
            if len(rep) < 2:
                continue
            reps = sorted(rep.values(), key=lambda mi: monos[mi])
            anchor = monos[reps[0]]
            for other in reps[1:]:
                plus = tuple(variables[v] for v in anchor)
                minus = tuple(variables[v] for v in monos[other])
                generators.append(GradedBinomial(plus, minus))
                emitted += 1
        counts[deg] = emitted
    return GeneratorReport(spec.label(), max_degree, counts, tuple(generators))


def _kuhn_matching(adjacency: list[list[int]], n_right: int) -> list[int] | None:
    """Maximum bipartite matching; returns right-match per left vertex."""
    match_right = [-1] * n_right

    def augment(left: int, seen: list[bool]) -> bool:
        for right in adjacency[left]:
            if not seen[right]:
                seen[right] = True
                if match_right[right] < 0 or augment(match_right[right], seen):
                    match_right[right] = left
                    return True
        return False

    for left in range(len(adjacency)):
        if not augment(left, [False] * n_right):
            return None
    out = [-1] * len(adjacency)
    for right, left in enumerate(match_right):
        if left >= 0:
            out[left] = right
    return out


def phi_substitute(lam: Partition, b: GradedBinomial) -> GradedBinomial:
    """Value substitution sending the staircase labels e, e-1, ..., 1 of a
    binomial to lam_1, lam_2, ..., lam_e."""
    e = lam.length
    value = {e - p: lam.parts[p] for p in range(e)}
    value[0] = 0

    def sub(mono):
        return tuple(tuple(value[v] for v in idx) for idx in mono)

    return GradedBinomial(sub(b.plus), sub(b.minus))


def lift_binomial_phi(lam: Partition, b: GradedBinomial) -> GradedBinomial:
    """Lift a binomial from the lambda-stratum ring to the staircase ring.

    Work through the positions of lambda one at a time: occurrences of the
    value lam_p get relabeled e - p + 1, choosing which occurrence per
    monomial factor via a perfect matching between the factors of the two
    sides (an edge per column where both factors still carry the value).
    Column multiset equality guarantees Hall's condition at every step, so
    the matching always exists; substituting the values back recovers b.
    """
    n = lam.n
    spec = VarietySpec.stratum(n, lam.parts)
    if not binomial_in_ideal(spec, b):
        raise NotInIdeal(f"binomial is not in the ideal of {spec.label()}")
    e = lam.length
    delta = b.degree
    left = [list(idx) for idx in b.plus]
    right = [list(idx) for idx in b.minus]
    done_left = [[False] * n for _ in range(delta)]
    done_right = [[False] * n for _ in range(delta)]

    for p in range(e):
        v = lam.parts[p]
        target = e - p
        adjacency: list[list[int]] = []
        for a in range(delta):
            nbrs = [
                bb
                for bb in range(delta)
                if any(
                    left[a][c] == v
                    and not done_left[a][c]
                    and right[bb][c] == v
                    and not done_right[bb][c]
                    for c in range(n)
                )
            ]
            adjacency.append(nbrs)
        matching = _kuhn_matching(adjacency, delta)
        if matching is None:
            raise MatchingFailure(
                f"no perfect matching while relabeling value {v}"
            )
        for a, bb in enumerate(matching):
            col = next(
                c
                for c in range(n)
                if left[a][c] == v
                and not done_left[a][c]
                and right[bb][c] == v
                and not done_right[bb][c]
            )
            left[a][col] = target
            done_left[a][col] = True
            right[bb][col] = target
            done_right[bb][col] = True

    lifted = GradedBinomial(
        tuple(tuple(row) for row in left), tuple(tuple(row) for row in right)
    )
    eta = Partition(tuple(range(e, 0, -1)), n)
    if not binomial_in_ideal(VarietySpec.stratum(n, eta.parts), lifted):
        raise MatchingFailure("lift left the staircase ideal")  # unreachable
    return lifted


def orbit_lift(gens, n: int) -> list[GradedBinomial]:
    """Pad generators with zero slots and close under coordinate permutations.

    Accepts a GeneratorReport or any iterable of binomials; deduplicates up
    to swapping the two monomials.
    """
    if isinstance(gens, GeneratorReport):
        gens = gens.generators
    gens = list(gens)
    if not gens:
        return []
    n0 = len(gens[0].plus[0])
    if n < n0:
        raise ValueError(f"cannot lift from {n0} coordinates down to {n}")
    pad = (0,) * (n - n0)
    seen = set()
    out: list[GradedBinomial] = []
    for g in gens:
        plus = [idx + pad for idx in g.plus]
        minus = [idx + pad for idx in g.minus]
        for perm in permutations(range(n)):
            p_plus = tuple(sorted(tuple(idx[perm[t]] for t in range(n)) for idx in plus))
            p_minus = tuple(sorted(tuple(idx[perm[t]] for t in range(n)) for idx in minus))
            if p_plus == p_minus:
                continue
            key = (p_plus, p_minus) if p_plus < p_minus else (p_minus, p_plus)
            if key not in seen:
                seen.add(key)
                out.append(GradedBinomial(key[0], key[1]))
    out.sort(key=lambda g: (g.plus, g.minus))
    return out
