"""Deterministic adversarial instance generators: the tightness construction
for the estimation-error constant, the minimax two-point pair, and noise
matrices with a prescribed decaying spectrum.

Constructions are embedded in the top-left corner of m x n zero matrices;
every checked quantity is invariant to this placement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import PerturbationInstance, estimation_constant
from .linalg import as_rng, sample_haar_frame
from .norms import SchattenIndex, as_index


def _embed_diag(diag: np.ndarray, m: int, n: int) -> np.ndarray:
    M = np.zeros((m, n))
    k = len(diag)
    M[:k, :k][np.diag_indices(k)] = diag
    return M


@dataclass(frozen=True)
class TightnessParams:
    """Parameters of the tightness construction.

    eta > 0 controls how close the achieved error ratio comes to the sharp
    constant c(q): the ratio is c(q) / (1 + eta). eta must be small enough
    that the implied epsilon = c(q) * eta / (1 + eta) stays in (0, 1);
    eta = 0 is rejected because the top-r subspace of B is then not unique.
    """

    r: int
    q: SchattenIndex
    eta: float
    m: int
    n: int

    def __post_init__(self):
        object.__setattr__(self, "q", as_index(self.q))
        if self.r < 1:
            raise ValueError("rank must be >= 1")
        if min(self.m, self.n) < 2 * self.r:
            raise ValueError(
                f"need m, n >= 2r = {2 * self.r}, got ({self.m}, {self.n})")
        if not self.eta > 0:
            raise ValueError("eta must be strictly positive")
        if self.implied_epsilon >= 1:
            raise ValueError(
                f"eta={self.eta} too large: implied epsilon must be < 1")

    @property
    def implied_epsilon(self) -> float:
        c = estimation_constant(self.q)
        return c * self.eta / (1.0 + self.eta)

    @property
    def expected_ratio(self) -> float:
        """Closed form for ||A_hat - A||_q / ||Z_max(r)||_q."""
        return estimation_constant(self.q) / (1.0 + self.eta)


def tightness_instance(params: TightnessParams) -> PerturbationInstance:
    """Instance whose estimation error attains the sharp constant up to eta.

    A = blockdiag(2 I_r, 0), Z = blockdiag(-(1+eta) I_r, I_r, 0), B = A + Z.
    The top-r approximation of B picks the second block, so the error is
    (2^q r + r)^{1/q} while ||Z_max(r)||_q = (1+eta) r^{1/q}.
    """
    r, m, n = params.r, params.m, params.n
    a = _embed_diag(np.concatenate([np.full(r, 2.0), np.zeros(r)]), m, n)
    z = _embed_diag(np.concatenate([np.full(r, -(1.0 + params.eta)),
                                    np.ones(r)]), m, n)
    return PerturbationInstance.from_truth(a, z, r)


def tightness_expected_error(params: TightnessParams) -> float:
    """Closed-form ||A_hat - A||_q for the tightness instance."""
    q = params.q
    if q.is_inf:
        return 2.0
    return (2.0 ** q.q * params.r + params.r) ** (1.0 / q.q)


@dataclass(frozen=True)
class MinimaxPair:
    """Two instances sharing one observation B but different truths.

    Any estimator must err by at least 2^{1/q - 1} xi on one of the two.
    """

    first: PerturbationInstance
    second: PerturbationInstance
    xi: float
    q: SchattenIndex

    @property
    def lower_bound(self) -> float:
        if self.q.is_inf:
            return self.xi / 2.0
        return 2.0 ** (1.0 / self.q.q - 1.0) * self.xi

    @property
    def truth_separation(self) -> float:
        """Closed-form ||A_1 - A_2||_q = 2^{1/q} xi."""
        if self.q.is_inf:
            return self.xi
        return 2.0 ** (1.0 / self.q.q) * self.xi


def minimax_pair(r: int, q, xi: float, dims: tuple[int, int]) -> MinimaxPair:
    """Two-point construction behind the minimax lower bound.

    Both truths are rank r with ||Z_k max(r)||_q = xi, built from diagonal
    blocks xi / r^{1/q} * I_r placed in complementary coordinate blocks.
    """
    q = as_index(q)
    m, n = dims
    if r < 1:
        raise ValueError("rank must be >= 1")
    if min(m, n) < 2 * r:
        raise ValueError(f"need m, n >= 2r = {2 * r}, got {dims}")
    if not xi > 0:
        raise ValueError("xi must be positive")
    scale = xi if q.is_inf else xi / r ** (1.0 / q.q)
    top = np.concatenate([np.full(r, scale), np.zeros(r)])
    bottom = np.concatenate([np.zeros(r), np.full(r, scale)])
    a1 = _embed_diag(top, m, n)
    z1 = _embed_diag(bottom, m, n)
    first = PerturbationInstance.from_truth(a1, z1, r)
    second = PerturbationInstance.from_truth(z1, a1, r)
    return MinimaxPair(first=first, second=second, xi=xi, q=q)


def example1_spectrum(length: int, q) -> np.ndarray:
    """Polynomially decaying spectrum sigma_k = k^{-1/q}; requires q > 1."""
    q = as_index(q)
    if q.is_inf:
        return np.ones(length)
    if q.q <= 1:
        raise ValueError("the polynomial-decay spectrum requires q > 1")
    return np.arange(1, length + 1, dtype=float) ** (-1.0 / q.q)


def decaying_noise(m: int, n: int, seed, q=None, spectrum=None) -> np.ndarray:
    """Random-frame noise matrix with a prescribed singular spectrum.

    Pass q for the polynomial k^{-1/q} decay, or an explicit descending
    spectrum (length <= min(m, n)). Frames are Haar distributed.
    """
    if (q is None) == (spectrum is None):
        raise ValueError("pass exactly one of q or spectrum")
    k = min(m, n)
    if spectrum is None:
        s = example1_spectrum(k, q)
    else:
        s = np.asarray(spectrum, dtype=float)
        if s.ndim != 1 or len(s) > k:
            raise ValueError(f"spectrum must be 1-D with length <= {k}")
        if np.any(np.diff(s) > 0) or np.any(s < 0):
            raise ValueError("spectrum must be descending and nonnegative")
    rng = as_rng(seed)
    w = len(s)
    U = sample_haar_frame(m, w, rng)
    V = sample_haar_frame(n, w, rng)
    return (U * s) @ V.T


def harmonic_number(k: int) -> float:
    return float(np.sum(1.0 / np.arange(1, k + 1)))
