"""Principal angles, Schatten-q sin-theta distances, Procrustes alignment,
and singular-value bounds for matrix products.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import as_matrix, check_frame, projector
from .norms import as_index, schatten_norm, vector_schatten


@dataclass(frozen=True)
class PrincipalAngles:
    """Principal angles between two equal-width orthonormal frames.

    cosines are the descending singular values of U1^T U2, clamped into
    [0, 1]; sines are the matching ascending singular values of
    (I - U1 U1^T) U2; angles = arctan2(sines, cosines).
    """

    cosines: np.ndarray
    angles: np.ndarray
    sines: np.ndarray

    def __len__(self) -> int:
        return len(self.cosines)


def _check_pair(U1, U2):
    U1 = check_frame(U1)
    U2 = check_frame(U2)
    if U1.shape != U2.shape:
        raise ValueError(f"frame shapes differ: {U1.shape} vs {U2.shape}")
    return U1, U2


def principal_angles(U1, U2) -> PrincipalAngles:
    """Principal angles between span(U1) and span(U2)."""
    U1, U2 = _check_pair(U1, U2)
    c = np.linalg.svd(U1.T @ U2, compute_uv=False)
    c = np.clip(c, 0.0, 1.0)
    # sqrt(1 - c^2) loses half the digits near c = 1; the residual SVD
    # recovers small sines at full precision
    s = np.linalg.svd(U2 - U1 @ (U1.T @ U2), compute_uv=False)
    s = np.clip(s[::-1], 0.0, 1.0)
    return PrincipalAngles(cosines=c, angles=np.arctan2(s, c), sines=s)


def sin_theta_distance(U1, U2, q) -> float:
    """Schatten-q norm of the sines of the principal angles."""
    pa = principal_angles(U1, U2)
    return vector_schatten(pa.sines, q)


def procrustes_align(U1, U2) -> np.ndarray:
    """Orthogonal r x r matrix O aligning U2 to U1.

    Built from the SVD of the cross-Gram matrix U2^T U1 = W S V^T as
    O = W V^T, so that sin-theta <= ||U1 - U2 O||_q <= 2 sin-theta.
    """
    U1, U2 = _check_pair(U1, U2)
    W, _, Vt = np.linalg.svd(U2.T @ U1)
    return W @ Vt


def projection_distance(U1, U2, q) -> float:
    """Schatten-q norm of the difference of the orthogonal projectors."""
    U1, U2 = _check_pair(U1, U2)
    return schatten_norm(projector(U1) - projector(U2), q)


@dataclass(frozen=True)
class ProductBoundResult:
    """Per-index certificates for singular values of a matrix product.

    Verifies sigma_i(AB) <= sigma_i(A) ||B|| and
    sigma_i(AB) >= sigma_i(A) sigma_n(B) for every i, plus the matching
    Schatten-q norm sandwich ||A||_q sigma_n(B) <= ||AB||_q <= ||A||_q ||B||.
    """

    product_values: np.ndarray
    upper_values: np.ndarray
    lower_values: np.ndarray
    norm_value: float
    norm_upper: float
    norm_lower: float
    holds: bool

    def __bool__(self) -> bool:
        return self.holds


def product_singular_bounds_hold(A, B, q, slack: float = 1e-9) -> ProductBoundResult:
    """Check the product singular-value and Schatten-norm sandwiches."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"inner dimensions differ: {A.shape} x {B.shape}")
    q = as_index(q)
    n = B.shape[0]
    sa = np.linalg.svd(A, compute_uv=False)
    sb = np.linalg.svd(B, compute_uv=False)
    sab = np.linalg.svd(A @ B, compute_uv=False)
    # sigma_n(B) with n = rows of B; zero when B has fewer columns than rows
    sb_min = float(sb[n - 1]) if len(sb) >= n else 0.0
    sb_max = float(sb[0])
    k = min(len(sa), len(sab))
    prod = sab[:k]
    upper = sa[:k] * sb_max
    lower = sa[:k] * sb_min
    scale = slack * max(1.0, sb_max * float(sa[0]) if len(sa) else 1.0)
    per_index_ok = bool(np.all(prod <= upper + scale)
                        and np.all(prod >= lower - scale))
    nv = vector_schatten(sab, q)
    nu = vector_schatten(sa, q) * sb_max
    nl = vector_schatten(sa, q) * sb_min
    norm_ok = nl - slack * max(1.0, nu) <= nv <= nu + slack * max(1.0, nu)
    return ProductBoundResult(prod, upper, lower, nv, nu, nl,
                              per_index_ok and norm_ok)
