"""Principal angle, sin-theta distance, Procrustes, and product-bound tests."""

import math

import numpy as np
import pytest

from schattenperturb.linalg import sample_haar_frame
from schattenperturb.subspaces import (principal_angles, procrustes_align,
                                       product_singular_bounds_hold,
                                       projection_distance,
                                       sin_theta_distance)

E1 = np.array([[1.0], [0.0]])
E2 = np.array([[0.0], [1.0]])


def test_principal_angles_identical():
    U = sample_haar_frame(6, 3, 1)
    pa = principal_angles(U, U)
    np.testing.assert_allclose(pa.cosines, 1.0, atol=1e-12)
    np.testing.assert_allclose(pa.sines, 0.0, atol=1e-7)
    np.testing.assert_allclose(pa.angles, 0.0, atol=1e-7)


def test_principal_angles_orthogonal():
    pa = principal_angles(E1, E2)
    assert pa.cosines[0] == pytest.approx(0.0, abs=1e-12)
    assert pa.sines[0] == pytest.approx(1.0)
    assert pa.angles[0] == pytest.approx(math.pi / 2)


def test_principal_angle_rotation():
    theta = 0.3
    U2 = np.array([[math.cos(theta)], [math.sin(theta)]])
    pa = principal_angles(E1, U2)
    assert pa.sines[0] == pytest.approx(math.sin(0.3), abs=1e-12)
    assert pa.sines[0] == pytest.approx(0.295520, abs=1e-6)


def test_principal_angles_small_angle_precision():
    # sines of order 1e-9 must survive; sqrt(1-cos^2) would round them away
    eps = 1e-9
    v = np.array([[1.0], [eps]])
    U2 = v / np.linalg.norm(v)
    pa = principal_angles(E1, U2)
    assert pa.sines[0] == pytest.approx(eps, rel=1e-6)


def test_principal_angles_shape_mismatch():
    with pytest.raises(ValueError):
        principal_angles(E1, np.eye(3, 1))


def test_sin_theta_distance():
    U = sample_haar_frame(5, 2, 3)
    for q in (1, 2, math.inf):
        assert sin_theta_distance(U, U, q) == pytest.approx(0.0, abs=1e-7)
        assert sin_theta_distance(E1, E2, q) == pytest.approx(1.0)


def test_procrustes_alignment_exact():
    U1 = sample_haar_frame(8, 3, 5)
    rng = np.random.default_rng(6)
    Q = sample_haar_frame(3, 3, rng)
    U2 = U1 @ Q
    O = procrustes_align(U1, U2)
    assert np.linalg.norm(U1 - U2 @ O) < 1e-9


def test_procrustes_sandwich_and_optimality():
    rng = np.random.default_rng(9)
    U1 = sample_haar_frame(8, 3, rng)
    U2 = sample_haar_frame(8, 3, rng)
    O = procrustes_align(U1, U2)
    dist = sin_theta_distance(U1, U2, 2)
    aligned = np.linalg.norm(U1 - U2 @ O)
    assert dist - 1e-9 <= aligned <= 2 * dist + 1e-9
    # no sampled orthogonal O' beats the Procrustes solution
    for _ in range(1000):
        Op = sample_haar_frame(3, 3, rng)
        assert np.linalg.norm(U1 - U2 @ Op) >= aligned - 1e-9


def test_projection_distance():
    U = sample_haar_frame(7, 2, 13)
    assert projection_distance(U, U, 2) == pytest.approx(0.0, abs=1e-9)
    assert projection_distance(E1, E2, math.inf) == pytest.approx(1.0)
    rng = np.random.default_rng(14)
    U1 = sample_haar_frame(7, 3, rng)
    U2 = sample_haar_frame(7, 3, rng)
    # Frobenius identity: ||P1 - P2||_F = sqrt(2) * sin-theta distance
    assert projection_distance(U1, U2, 2) == pytest.approx(
        math.sqrt(2) * sin_theta_distance(U1, U2, 2), abs=1e-9)


def test_product_bounds_identity_and_scaling():
    rng = np.random.default_rng(15)
    A = rng.standard_normal((5, 4))
    res = product_singular_bounds_hold(A, np.eye(4), 2)
    assert bool(res)
    np.testing.assert_allclose(res.product_values, res.upper_values,
                               atol=1e-9)
    np.testing.assert_allclose(res.product_values, res.lower_values,
                               atol=1e-9)
    res2 = product_singular_bounds_hold(A, 2 * np.eye(4), 2)
    np.testing.assert_allclose(res2.product_values,
                               2 * np.linalg.svd(A, compute_uv=False),
                               atol=1e-9)


def test_product_bounds_random_pairs():
    rng = np.random.default_rng(16)
    for _ in range(300):
        m, k, n = rng.integers(2, 11), rng.integers(2, 9), rng.integers(2, 7)
        A = rng.standard_normal((m, k))
        B = rng.standard_normal((k, n))
        assert bool(product_singular_bounds_hold(A, B, 2))


def test_product_bounds_dimension_check():
    with pytest.raises(ValueError):
        product_singular_bounds_hold(np.eye(3), np.eye(4), 2)
