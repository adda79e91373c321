"""The rank-r truncated-SVD estimator and evaluators for every estimation,
projection, and sin-theta upper bound, aggregated into auditable reports.

Bounds that divide by a vanishing singular value are reported as
inapplicable (``None``) instead of raising, so a report can still be
produced on degenerate inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import RANK_REL_TOL, as_matrix, svd, truncate
from .norms import (as_index, numerical_rank, schatten_norm,
                    truncated_schatten_norm, vector_schatten)
from .subspaces import sin_theta_distance

# relative slack applied to every bound comparison; lhs and bounds come from
# independent SVDs and accumulate O(eps * norm) error
def bound_slack(lhs: float) -> float:
    return 1e-9 * (1.0 + lhs)


@dataclass(frozen=True)
class PerturbationInstance:
    """The triple (A, Z, B = A + Z) with the target rank r.

    A must have numerical rank at most r; B must equal A + Z entrywise
    within 1e-12.
    """

    a: np.ndarray
    z: np.ndarray
    b: np.ndarray
    r: int

    def __post_init__(self):
        a = as_matrix(self.a)
        z = as_matrix(self.z)
        b = as_matrix(self.b)
        if not (a.shape == z.shape == b.shape):
            raise ValueError("A, Z, B must share one shape")
        if not 1 <= self.r <= min(a.shape):
            raise ValueError(f"rank {self.r} out of range [1, {min(a.shape)}]")
        if np.max(np.abs(b - (a + z))) > 1e-12 * max(1.0, np.max(np.abs(b))):
            raise ValueError("B must equal A + Z entrywise")
        sa = np.linalg.svd(a, compute_uv=False)
        if self.r < len(sa) and sa[0] > 0 and sa[self.r] >= RANK_REL_TOL * sa[0]:
            raise ValueError(f"A has numerical rank above r={self.r}")

    @classmethod
    def from_truth(cls, a, z, r: int) -> "PerturbationInstance":
        a = as_matrix(a)
        z = as_matrix(z)
        return cls(a=a, z=z, b=a + z, r=r)

    @property
    def shape(self) -> tuple[int, int]:
        return self.a.shape


def estimate_low_rank(B, r: int):
    """Best rank-r approximation of B with its top-r singular frames.

    Returns (A_hat, U_hat, V_hat).
    """
    B = as_matrix(B)
    if not 1 <= r <= min(B.shape):
        raise ValueError(f"rank {r} out of range [1, {min(B.shape)}]")
    F = svd(B)
    return truncate(F, r), F.left[:, :r], F.right[:, :r]


def estimation_constant(q) -> float:
    """The sharp constant in front of ||Z_max(r)||_q: (2^q+1)^{1/q} for
    q in [1,2], sqrt(5) for q in [2,inf), and 2 at q = inf."""
    q = as_index(q)
    if q.is_inf:
        return 2.0
    qf = q.q
    if qf <= 2.0:
        return (2.0 ** qf + 1.0) ** (1.0 / qf)
    return math.sqrt(5.0)


def bound_thm1(Z, r: int, q) -> float:
    """Estimation-error bound: estimation_constant(q) * ||Z_max(r)||_q."""
    return estimation_constant(q) * truncated_schatten_norm(Z, r, q)


def bound_triangle(Z, q) -> float:
    """Baseline estimation bound 2 ||Z||_q from SVD optimality."""
    return 2.0 * schatten_norm(Z, q)


def bound_rank_spectral(Z, r: int, q) -> float:
    """Baseline estimation bound 2 r^{1/q} ||Z|| (r^{1/inf} = 1)."""
    q = as_index(q)
    factor = 1.0 if q.is_inf else float(r) ** (1.0 / q.q)
    return 2.0 * factor * schatten_norm(Z, math.inf)


def bound_wedin_reconstruction(inst: PerturbationInstance, q) -> float | None:
    """Classical reconstruction bound ||Z||_q (3 + ||B - A_hat||_q / sigma_r(B)).

    Inapplicable (None) when sigma_r(B) vanishes relative to sigma_1(B).
    """
    sb = np.linalg.svd(inst.b, compute_uv=False)
    if sb[0] == 0 or sb[inst.r - 1] < 1e-12 * sb[0]:
        return None
    a_hat, _, _ = estimate_low_rank(inst.b, inst.r)
    resid = schatten_norm(inst.b - a_hat, q)
    return schatten_norm(inst.z, q) * (3.0 + resid / float(sb[inst.r - 1]))


def projection_error(inst: PerturbationInstance, q) -> tuple[float, float]:
    """(||P_{U_hat_perp} A||_q, ||A P_{V_hat_perp}||_q) for the estimator's frames."""
    _, u_hat, v_hat = estimate_low_rank(inst.b, inst.r)
    left = schatten_norm(inst.a - u_hat @ (u_hat.T @ inst.a), q)
    right = schatten_norm(inst.a - (inst.a @ v_hat) @ v_hat.T, q)
    return left, right


def bound_thm2(Z, r: int, q) -> float:
    """Projection-error bound 2 ||Z_max(r)||_q."""
    return 2.0 * truncated_schatten_norm(Z, r, q)


def true_frames(inst: PerturbationInstance):
    """Top-r singular frames (U, V) of the ground truth A."""
    F = svd(inst.a)
    return F.left[:, :inst.r], F.right[:, :inst.r]


def bound_refined_projection(inst: PerturbationInstance, q,
                             U=None, V=None) -> tuple[float, float]:
    """Refined projection bounds using both the estimated and true frames.

    left  = ||(P_{U_hat_perp} Z)_max(r)||_q + ||(P_{U_perp} Z)_max(r)||_q,
    right analogously with the right projectors. U, V default to the top-r
    frames of A.
    """
    if U is None or V is None:
        tu, tv = true_frames(inst)
        U = tu if U is None else U
        V = tv if V is None else V
    _, u_hat, v_hat = estimate_low_rank(inst.b, inst.r)
    r, z = inst.r, inst.z
    left = (truncated_schatten_norm(z - u_hat @ (u_hat.T @ z), r, q)
            + truncated_schatten_norm(z - U @ (U.T @ z), r, q))
    right = (truncated_schatten_norm(z - (z @ v_hat) @ v_hat.T, r, q)
             + truncated_schatten_norm(z - (z @ V) @ V.T, r, q))
    return left, right


def sin_theta_errors(inst: PerturbationInstance, q) -> tuple[float, float]:
    """Left and right sin-theta distances between true and estimated frames."""
    _, u_hat, v_hat = estimate_low_rank(inst.b, inst.r)
    U, V = true_frames(inst)
    return (sin_theta_distance(u_hat, U, q), sin_theta_distance(v_hat, V, q))


def bound_sin_theta_thm5(Z, A, r: int, q) -> float | None:
    """Perturbation-free-denominator sin-theta bound 2 ||Z_max(r)||_q / sigma_r(A)."""
    sa = np.linalg.svd(as_matrix(A), compute_uv=False)
    if sa[0] == 0 or sa[r - 1] < 1e-12 * sa[0]:
        return None
    return 2.0 * truncated_schatten_norm(Z, r, q) / float(sa[r - 1])


def _wedin_numerator(inst: PerturbationInstance, q) -> float:
    _, u_hat, v_hat = estimate_low_rank(inst.b, inst.r)
    return max(schatten_norm(inst.z @ v_hat, q),
               schatten_norm(u_hat.T @ inst.z, q))


def bound_wedin_sin_theta(inst: PerturbationInstance, q) -> float | None:
    """Classical Wedin sin-theta bound max{||Z V_hat||_q, ||U_hat^T Z||_q} / sigma_r(B)."""
    sb = np.linalg.svd(inst.b, compute_uv=False)
    if sb[0] == 0 or sb[inst.r - 1] < 1e-12 * sb[0]:
        return None
    return _wedin_numerator(inst, q) / float(sb[inst.r - 1])


def bound_projection_via_sin_theta(inst: PerturbationInstance, q) -> float | None:
    """Projection bound routed through Wedin's theorem:
    max{||Z V_hat||_q, ||U_hat^T Z||_q} * sigma_1(A) / sigma_r(B)."""
    sb = np.linalg.svd(inst.b, compute_uv=False)
    if sb[0] == 0 or sb[inst.r - 1] < 1e-12 * sb[0]:
        return None
    sa1 = float(np.linalg.svd(inst.a, compute_uv=False)[0])
    return _wedin_numerator(inst, q) * sa1 / float(sb[inst.r - 1])


def _sigma_r(A, r: int) -> float | None:
    sa = np.linalg.svd(as_matrix(A), compute_uv=False)
    if sa[0] == 0 or sa[r - 1] < 1e-12 * sa[0]:
        return None
    return float(sa[r - 1])


def bound_vu_psd(Z, A, r: int) -> float | None:
    """Frobenius sin-theta bound sqrt(2) ||Z||_F / sigma_r(A) for psd A."""
    sr = _sigma_r(A, r)
    if sr is None:
        return None
    return math.sqrt(2.0) * schatten_norm(Z, 2) / sr


def bound_yu_lei_psd(Z, A, r: int) -> float | None:
    """Frobenius sin-theta bound 2 min{r^{1/2} ||Z||, ||Z||_F} / sigma_r(A)."""
    sr = _sigma_r(A, r)
    if sr is None:
        return None
    num = min(math.sqrt(r) * schatten_norm(Z, math.inf), schatten_norm(Z, 2))
    return 2.0 * num / sr


def bound_yu_asym(Z, A, r: int) -> float | None:
    """Frobenius sin-theta bound for general (asymmetric) matrices:
    2 (2 ||A|| + ||Z||) min{r^{1/2} ||Z||, ||Z||_F} / sigma_r(A)^2."""
    sr = _sigma_r(A, r)
    if sr is None:
        return None
    z_spec = schatten_norm(Z, math.inf)
    num = min(math.sqrt(r) * z_spec, schatten_norm(Z, 2))
    return 2.0 * (2.0 * schatten_norm(A, math.inf) + z_spec) * num / sr ** 2


def is_symmetric_psd(A, tol: float = 1e-10) -> bool:
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        return False
    scale = max(1.0, float(np.max(np.abs(A))))
    if np.max(np.abs(A - A.T)) > tol * scale:
        return False
    w = np.linalg.eigvalsh((A + A.T) / 2.0)
    return bool(w[0] >= -1e-10 * max(1.0, abs(float(w[-1]))))


@dataclass(frozen=True)
class BoundCheck:
    """One evaluated bound: its value, the quantity it bounds, and the verdict."""

    name: str
    value: float | None
    lhs_name: str
    lhs_value: float
    applicable: bool

    @property
    def violated(self) -> bool:
        if not self.applicable or self.value is None:
            return False
        return self.lhs_value > self.value + bound_slack(self.lhs_value)


@dataclass(frozen=True)
class BoundReport:
    """Evaluated left-hand quantities and all applicable bounds for one
    instance at one exponent q."""

    q: object
    lhs_estimation_error: float
    lhs_projection_errors: tuple[float, float]
    lhs_sin_theta: tuple[float, float]
    bounds: tuple[BoundCheck, ...] = field(default=())

    @property
    def violations(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.bounds if c.violated)

    @staticmethod
    def csv_header() -> str:
        cols = ["instance", "q", "lhs_estimation", "lhs_projection_left",
                "lhs_projection_right", "lhs_sin_theta_left",
                "lhs_sin_theta_right"]
        for name in _BOUND_ORDER:
            cols += [f"bound_{name}", f"applicable_{name}"]
        cols.append("violations")
        return ",".join(cols)

    def csv_row(self, instance_id: str = "") -> str:
        def fmt(x):
            return format(x, ".12g")

        by_name = {c.name: c for c in self.bounds}
        fields = [instance_id, str(self.q), fmt(self.lhs_estimation_error),
                  fmt(self.lhs_projection_errors[0]),
                  fmt(self.lhs_projection_errors[1]),
                  fmt(self.lhs_sin_theta[0]), fmt(self.lhs_sin_theta[1])]
        for name in _BOUND_ORDER:
            c = by_name.get(name)
            if c is None or not c.applicable or c.value is None:
                fields += ["", "0"]
            else:
                fields += [fmt(c.value), "1"]
        fields.append(";".join(self.violations))
        return ",".join(fields)


_BOUND_ORDER = ("thm1", "triangle", "rank_spectral", "wedin_reconstruction",
                "thm2_left", "thm2_right", "refined_left", "refined_right",
                "sin_theta_thm5", "wedin_sin_theta",
                "projection_via_sin_theta", "vu_psd", "yu_lei_psd", "yu_asym")


def bound_report(inst: PerturbationInstance, q) -> BoundReport:
    """Evaluate every left-hand quantity and every applicable bound."""
    q = as_index(q)
    a_hat, _, _ = estimate_low_rank(inst.b, inst.r)
    lhs_est = schatten_norm(a_hat - inst.a, q)
    lhs_proj = projection_error(inst, q)
    lhs_sin = sin_theta_errors(inst, q)
    sin_max = max(lhs_sin)

    checks = []

    def add(name, value, lhs_name, lhs_value, applicable=True):
        applicable = applicable and value is not None
        checks.append(BoundCheck(name, value, lhs_name, lhs_value, applicable))

    add("thm1", bound_thm1(inst.z, inst.r, q), "estimation", lhs_est)
    add("triangle", bound_triangle(inst.z, q), "estimation", lhs_est)
    add("rank_spectral", bound_rank_spectral(inst.z, inst.r, q),
        "estimation", lhs_est)
    add("wedin_reconstruction", bound_wedin_reconstruction(inst, q),
        "estimation", lhs_est)

    t2 = bound_thm2(inst.z, inst.r, q)
    add("thm2_left", t2, "projection_left", lhs_proj[0])
    add("thm2_right", t2, "projection_right", lhs_proj[1])
    refined = bound_refined_projection(inst, q)
    add("refined_left", refined[0], "projection_left", lhs_proj[0])
    add("refined_right", refined[1], "projection_right", lhs_proj[1])

    add("sin_theta_thm5", bound_sin_theta_thm5(inst.z, inst.a, inst.r, q),
        "sin_theta_max", sin_max)
    add("wedin_sin_theta", bound_wedin_sin_theta(inst, q),
        "sin_theta_max", sin_max)
    add("projection_via_sin_theta", bound_projection_via_sin_theta(inst, q),
        "projection_left", lhs_proj[0])

    # Frobenius-only literature bounds on the left sin-theta distance
    frob = not q.is_inf and q.q == 2.0
    psd = frob and is_symmetric_psd(inst.a) and is_symmetric_psd(inst.b)
    add("vu_psd", bound_vu_psd(inst.z, inst.a, inst.r),
        "sin_theta_left", lhs_sin[0], applicable=psd)
    add("yu_lei_psd", bound_yu_lei_psd(inst.z, inst.a, inst.r),
        "sin_theta_left", lhs_sin[0], applicable=psd)
    add("yu_asym", bound_yu_asym(inst.z, inst.a, inst.r),
        "sin_theta_left", lhs_sin[0], applicable=frob)

    return BoundReport(q=q, lhs_estimation_error=lhs_est,
                       lhs_projection_errors=lhs_proj, lhs_sin_theta=lhs_sin,
                       bounds=tuple(checks))
