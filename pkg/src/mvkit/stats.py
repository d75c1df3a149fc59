"""Empirical moment pipeline: sample ingestion, estimates, diagnostics.

This is the only module that touches floating point; the algebraic modules
stay exact.  Statistics are reported raw, with no calibration or rejection
thresholds.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .equations import (
    SparsePolynomial,
    m33_cubic,
    pentad_family,
    quadrilateral_set_quartic,
    sigma2_m44_cubics,
)
from .errors import ParseError, RaggedRows, ScopeMismatch
from .exact import RationalMatrix, determinant
from .model import (
    Partition,
    enumerate_moments,
    enumerate_stratum,
    format_index,
)


@dataclass(frozen=True)
class SampleMatrix:
    """T samples of an n-dimensional random vector."""

    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"need a T x n matrix, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")
        object.__setattr__(self, "values", arr)

    @property
    def T(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]


def read_samples(path) -> SampleMatrix:
    """Parse a CSV of samples; a non-numeric first row is taken as a header."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        width = None
        for lineno, row in enumerate(reader, start=1):
            if not row or all(not cell.strip() for cell in row):
                continue
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise RaggedRows(
                    f"expected {width} columns, found {len(row)}", line=lineno
                )
            try:
                rows.append([float(cell) for cell in row])
            except ValueError:
                if lineno == 1:
                    continue  # header row
                raise ParseError(f"non-numeric value in {row!r}", line=lineno)
    if not rows:
        raise ParseError("no numeric rows found")
    return SampleMatrix(np.array(rows))


@dataclass(frozen=True)
class EmpiricalMoments:
    """Sample-average estimates of the moments in one scope."""

    n: int
    scope: tuple  # ("full", d) or ("stratum", parts)
    T: int
    values: dict  # MomentIndex -> float

    @property
    def d(self) -> int:
        return self.scope[1] if self.scope[0] == "full" else sum(self.scope[1])


def empirical_moments(
    data: SampleMatrix, d: int | None = None, lam=None
) -> EmpiricalMoments:
    """Estimate each moment in the scope by the sample average of the monomial."""
    if (d is None) == (lam is None):
        raise ValueError("give exactly one of d, lam")
    if lam is not None:
        parts = tuple(lam.parts) if isinstance(lam, Partition) else tuple(lam)
        indices = enumerate_stratum(data.n, Partition(parts, data.n))
        scope = ("stratum", parts)
    else:
        indices = enumerate_moments(data.n, d)
        scope = ("full", d)
    values = {}
    for idx in indices:
        mono = np.ones(data.T)
        for k, ik in enumerate(idx):
            if ik:
                mono = mono * data.values[:, k] ** ik
        values[idx] = float(mono.mean())
    return EmpiricalMoments(data.n, scope, data.T, values)


def hankel_psd(moments, q: int, rel_tol: float = 1e-9) -> bool:
    """Truncated realizability check on a univariate moment sequence.

    Builds the (q+1) x (q+1) Hankel matrix from moments mu_0 .. mu_2q and
    tests positive semidefiniteness through leading principal minors, with a
    tolerance scaled by the largest absolute entry.  Exact dyadic rational
    arithmetic is used for the minors, so the only rounding is in the inputs.
    """
    moments = list(moments)
    if len(moments) < 2 * q + 1:
        raise ValueError(f"need moments up to order {2 * q}")
    hankel = [
        [Fraction(moments[i + j]) for j in range(q + 1)] for i in range(q + 1)
    ]
    scale = max(abs(x) for row in hankel for x in row)
    tol = Fraction(rel_tol) * (scale if scale else 1)
    for k in range(1, q + 2):
        minor = determinant(
            RationalMatrix.from_rows([row[:k] for row in hankel[:k]])
        )
        if minor < -tol:
            return False
    return True


def hamburger_check(data: SampleMatrix, q: int) -> list[bool]:
    """Per-coordinate truncated realizability verdicts from sample moments."""
    verdicts = []
    for k in range(data.n):
        xs = data.values[:, k]
        mus = [float(np.mean(xs**i)) for i in range(2 * q + 1)]
        verdicts.append(hankel_psd(mus, q))
    return verdicts


_SELECTORS = ("pentad", "m33", "quartic", "m44")


def _statistics_for(selector: str, n: int) -> list[tuple[str, SparsePolynomial]]:
    if selector == "pentad":
        labels = []
        polys = pentad_family(n)
        for supp, poly in zip(combinations(range(n), 5), polys):
            labels.append(("pentad[%s]" % ",".join(map(str, supp)), poly))
        return labels
    if selector == "m33":
        return [("m33_cubic", m33_cubic())]
    if selector == "quartic":
        return [("quadrilateral_quartic", quadrilateral_set_quartic())]
    if selector == "m44":
        return [
            (f"m44_cubic_{i + 1}", poly)
            for i, poly in enumerate(sigma2_m44_cubics())
        ]
    raise ValueError(f"unknown statistic {selector!r}; choose from {_SELECTORS}")


def test_statistics(moments: EmpiricalMoments, which) -> list[tuple[str, float]]:
    """Evaluate selected vanishing statistics at empirical moments.

    Values are reported raw; under an r-component product mixture the
    statistics whose varieties contain sigma_r concentrate near zero as the
    sample size grows.
    """
    if isinstance(which, str):
        which = [s.strip() for s in which.split(",") if s.strip()]
    out = []
    for selector in which:
        for name, poly in _statistics_for(selector, moments.n):
            missing = poly.support() - set(moments.values)
            if missing:
                raise ScopeMismatch(
                    f"{name} needs moments "
                    f"{sorted(format_index(i) for i in missing)} outside the scope"
                )
            out.append((name, float(poly.evaluate(moments.values))))
    return out
