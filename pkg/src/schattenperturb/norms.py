"""Schatten-q, truncated Schatten-q, and Ky Fan norms, dual exponents,
the dual-witness construction, and the Karamata majorization check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import RANK_REL_TOL, SPECTRUM_FLOOR, as_matrix, svd


class SchattenIndex:
    """An exponent q in [1, inf] together with its dual p (1/p + 1/q = 1).

    Infinity is an explicit marker, never a large float. Finite exponents
    are stored as exact fractions so that dual(dual(q)) == q exactly.
    """

    __slots__ = ("_q",)

    def __init__(self, q):
        if isinstance(q, SchattenIndex):
            self._q = q._q
            return
        if isinstance(q, str):
            if q.strip().lower() in ("inf", "infinity", "oo"):
                self._q = None
                return
            q = Fraction(q.strip())
        if isinstance(q, float) and math.isinf(q):
            self._q = None
            return
        qf = Fraction(q)
        if qf < 1:
            raise ValueError(f"Schatten exponent must be >= 1, got {q}")
        self._q = qf

    @property
    def is_inf(self) -> bool:
        return self._q is None

    @property
    def q(self) -> float:
        return math.inf if self._q is None else float(self._q)

    @property
    def dual(self) -> "SchattenIndex":
        if self._q is None:
            return SchattenIndex(1)
        if self._q == 1:
            return SchattenIndex(math.inf)
        return SchattenIndex(self._q / (self._q - 1))

    def __float__(self) -> float:
        return self.q

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchattenIndex):
            try:
                other = SchattenIndex(other)
            except (ValueError, TypeError):
                return NotImplemented
        return self._q == other._q

    def __hash__(self) -> int:
        return hash(self._q)

    def __repr__(self) -> str:
        return f"SchattenIndex({self})"

    def __str__(self) -> str:
        if self._q is None:
            return "inf"
        if self._q.denominator == 1:
            return str(self._q.numerator)
        return f"{float(self._q):g}"


def as_index(q) -> SchattenIndex:
    return q if isinstance(q, SchattenIndex) else SchattenIndex(q)


def check_spectrum(x) -> np.ndarray:
    """Validate a descending, nonnegative, finite singular spectrum."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 1:
        raise ValueError("spectrum must be a 1-D vector")
    if not np.all(np.isfinite(x)) or np.any(x < 0):
        raise ValueError("spectrum entries must be finite and nonnegative")
    if np.any(np.diff(x) > 0):
        raise ValueError("spectrum must be sorted descending")
    return x


def vector_schatten(values, q) -> float:
    """Schatten norm of a nonnegative singular-value vector.

    Values below SPECTRUM_FLOOR are clamped to 0 before exponentiation to
    avoid noise amplification for exponents near 1.
    """
    q = as_index(q)
    v = np.asarray(values, dtype=float)
    v = np.where(v < SPECTRUM_FLOOR, 0.0, v)
    if v.size == 0:
        return 0.0
    if q.is_inf:
        return float(np.max(v))
    top = float(np.max(v))
    if top == 0.0:
        return 0.0
    # factor out the top value so powers stay in [0, 1]
    return top * float(np.sum((v / top) ** q.q)) ** (1.0 / q.q)


def schatten_norm(M, q) -> float:
    """(sum_i sigma_i^q)^(1/q) for finite q; the largest sigma for q = inf."""
    M = as_matrix(M)
    s = np.linalg.svd(M, compute_uv=False)
    return vector_schatten(s, q)


def truncated_schatten_norm(M, r: int, q) -> float:
    """Schatten-q norm of the best rank-r approximation: top-r values only."""
    M = as_matrix(M)
    k = min(M.shape)
    if not 1 <= r <= k:
        raise ValueError(f"rank {r} out of range [1, {k}]")
    s = np.linalg.svd(M, compute_uv=False)
    return vector_schatten(s[:r], q)


def ky_fan(M, s: int) -> float:
    """Ky Fan s-norm: the sum of the s largest singular values."""
    M = as_matrix(M)
    k = min(M.shape)
    if not 1 <= s <= k:
        raise ValueError(f"count {s} out of range [1, {k}]")
    sv = np.linalg.svd(M, compute_uv=False)
    return float(np.sum(sv[:s]))


def numerical_rank(values, rel_tol: float = RANK_REL_TOL) -> int:
    """Number of singular values above rel_tol * sigma_1."""
    values = np.asarray(values, dtype=float)
    if values.size == 0 or values[0] <= 0:
        return 0
    return int(np.sum(values > rel_tol * values[0]))


def dual_witness(X, r: int, q) -> np.ndarray:
    """Rank-<= r unit-q-norm matrix B attaining <B, X> = ||X_max(r)||_p.

    Built from the top r' = min(r, rank(X)) singular pairs of X with the
    diagonal scaled so that Sigma_ii^q / lambda_i^p is constant, then
    normalized to ||B||_q = 1 so the duality supremum is attained directly.

    Requires finite q > 1 (the endpoint exponent ratios are degenerate).
    """
    q = as_index(q)
    if q.is_inf or q.q == 1.0:
        raise ValueError("dual witness requires finite q > 1")
    X = as_matrix(X)
    F = svd(X)
    rk = numerical_rank(F.values)
    if rk == 0:
        raise ValueError("dual witness is undefined for the zero matrix")
    k = min(X.shape)
    if not 1 <= r <= k:
        raise ValueError(f"rank {r} out of range [1, {k}]")
    rp = min(r, rk)
    lam = F.values[:rp]
    p = q.dual.q
    # Sigma_i propto lambda_i^(p/q); normalizing gives sum Sigma_i^q = 1 and
    # <B, X> = sum Sigma_i lambda_i = (sum lambda_i^p)^(1/p)
    weights = lam ** (p / q.q)
    weights = weights / vector_schatten(weights, q)
    return (F.left[:, :rp] * weights) @ F.right[:, :rp].T


@dataclass(frozen=True)
class KaramataResult:
    """Outcome of the majorization check for one pair of spectra."""

    prefix_dominated: bool
    failing_prefix: int | None
    x_power_sum: float
    y_power_sum: float
    conclusion_holds: bool | None

    def __bool__(self) -> bool:
        return bool(self.prefix_dominated and self.conclusion_holds)


def karamata_holds(x, y, p: float, slack: float = 1e-9) -> KaramataResult:
    """Check prefix-sum domination of x by y and the implied power-sum bound.

    If every prefix sum of x is <= the matching prefix sum of y, the power
    sums satisfy sum x_i^p <= sum y_i^p for p >= 1; both facts are verified
    and reported. If domination fails, the conclusion is not asserted.
    """
    x = check_spectrum(x)
    y = check_spectrum(y)
    if len(x) != len(y):
        raise ValueError("spectra must have the same length")
    if p < 1:
        raise ValueError("exponent p must be >= 1")
    cx = np.cumsum(x)
    cy = np.cumsum(y)
    scale = max(1.0, float(cy[-1]))
    bad = np.nonzero(cx > cy + slack * scale)[0]
    xp = float(np.sum(x ** p))
    yp = float(np.sum(y ** p))
    if bad.size:
        return KaramataResult(False, int(bad[0]) + 1, xp, yp, None)
    holds = xp <= yp + slack * max(1.0, yp)
    return KaramataResult(True, None, xp, yp, holds)
