"""Dense real-matrix foundation: SVD, truncation, projectors, complements,
and seeded random sampling of test ensembles.

All functions are pure; RNG state is owned by the caller (pass a seed or a
``numpy.random.Generator``). Matrices are plain float64 ndarrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Shared tolerances. All modules agree on these.
ORTHO_TOL = 1e-10        # spectral deviation of frame^T frame from I
RECON_TOL = 1e-10        # relative Frobenius reconstruction error
RANK_REL_TOL = 1e-10     # singular values below this * sigma_1 count as zero
SPECTRUM_FLOOR = 1e-14   # clamp tiny singular values to 0 before powering


def as_matrix(M) -> np.ndarray:
    """Validate and return a 2-D float64 matrix with finite entries."""
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] < 1 or M.shape[1] < 1:
        raise ValueError(f"expected a 2-D matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return M


def check_frame(U, tol: float = ORTHO_TOL) -> np.ndarray:
    """Validate that U is a p x r matrix with orthonormal columns."""
    U = as_matrix(U)
    p, r = U.shape
    if r > p:
        raise ValueError(f"frame width {r} exceeds ambient dimension {p}")
    dev = U.T @ U - np.eye(r)
    if np.linalg.norm(dev, 2) > 10 * tol:
        raise ValueError("columns are not orthonormal within tolerance")
    return U


def as_rng(seed) -> np.random.Generator:
    """Coerce an int seed, SeedSequence, or Generator into a Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True)
class SvdFactors:
    """Full (thin) SVD of a matrix: left frame, descending values, right frame.

    left is m x k, right is n x k with k = min(m, n); values are descending
    and nonnegative. ``left @ diag(values) @ right.T`` reconstructs the source.
    """

    left: np.ndarray
    values: np.ndarray
    right: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.left.shape[0], self.right.shape[0]

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.values) @ self.right.T


def svd(M) -> SvdFactors:
    """Singular value decomposition with a deterministic sign convention.

    Signs are fixed so the largest-magnitude entry of each left singular
    vector is positive (ties broken by lowest row index), which makes
    outputs reproducible across runs for a fixed input.

    Raises ``numpy.linalg.LinAlgError`` if the decomposition does not
    converge.
    """
    M = as_matrix(M)
    U, s, Vt = np.linalg.svd(M, full_matrices=False)
    # sign fix: argmax returns the lowest index on ties
    pivot = np.argmax(np.abs(U), axis=0)
    flip = np.sign(U[pivot, np.arange(U.shape[1])])
    flip[flip == 0] = 1.0
    U = U * flip
    Vt = Vt * flip[:, None]
    return SvdFactors(left=U, values=s, right=Vt.T)


def truncate(F: SvdFactors, r: int) -> np.ndarray:
    """Best rank-r approximation sum_{i<=r} sigma_i u_i v_i^T; r=0 gives zero."""
    k = len(F.values)
    if not 0 <= r <= k:
        raise ValueError(f"rank {r} out of range [0, {k}]")
    if r == 0:
        return np.zeros(F.shape)
    return (F.left[:, :r] * F.values[:r]) @ F.right[:, :r].T


def residual(F: SvdFactors, r: int) -> np.ndarray:
    """Remainder sum_{i>r} sigma_i u_i v_i^T, so truncate + residual = source."""
    k = len(F.values)
    if not 0 <= r <= k:
        raise ValueError(f"rank {r} out of range [0, {k}]")
    return (F.left[:, r:] * F.values[r:]) @ F.right[:, r:].T


def projector(U) -> np.ndarray:
    """Orthogonal projector U U^T onto the column span of a frame."""
    U = check_frame(U)
    return U @ U.T


def orthonormal_complement(U) -> np.ndarray:
    """A p x (p-r) frame spanning the orthogonal complement of span(U)."""
    U = check_frame(U)
    p, r = U.shape
    if r == p:
        raise ValueError("frame spans the full space; complement is empty")
    # columns of the full left factor beyond the first r span the null space
    # of U^T
    W = np.linalg.svd(U, full_matrices=True)[0]
    return W[:, r:]


def sample_haar_frame(p: int, r: int, seed) -> np.ndarray:
    """Draw a p x r frame uniformly from the Stiefel manifold.

    QR of an i.i.d. standard Gaussian matrix, with the signs of the R
    diagonal forced positive (the standard correction for uniformity).
    """
    if not 1 <= r <= p:
        raise ValueError(f"need 1 <= r <= p, got r={r}, p={p}")
    rng = as_rng(seed)
    G = rng.standard_normal((p, r))
    Q, R = np.linalg.qr(G)
    d = np.sign(np.diag(R))
    d[d == 0] = 1.0
    return Q * d


def sample_gaussian(m: int, n: int, sigma: float, seed) -> np.ndarray:
    """m x n matrix with i.i.d. N(0, sigma^2) entries; sigma=0 gives zero."""
    if sigma < 0:
        raise ValueError("sigma must be nonnegative")
    if m < 1 or n < 1:
        raise ValueError("dimensions must be positive")
    if sigma == 0:
        return np.zeros((m, n))
    rng = as_rng(seed)
    return sigma * rng.standard_normal((m, n))


def sample_unit_vector(p: int, seed) -> np.ndarray:
    """Uniform random unit vector in R^p."""
    rng = as_rng(seed)
    v = rng.standard_normal(p)
    return v / np.linalg.norm(v)


def save_matrix(path, M) -> None:
    """Write a matrix as headerless CSV: one row per line, decimal floats."""
    M = as_matrix(M)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in M:
            fh.write(",".join(format(x, ".17g") for x in row) + "\n")


def load_matrix(path) -> np.ndarray:
    """Read a matrix written by :func:`save_matrix` (dimensions inferred)."""
    M = np.loadtxt(path, delimiter=",", ndmin=2)
    return as_matrix(M)
