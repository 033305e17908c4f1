"""Group composition and range profiles."""

import numpy as np
import pytest

from su4euler import (
    SU4_GENERATOR_SEQUENCE,
    compose_su2,
    compose_su3,
    compose_su4,
    range_profile,
)


def special_unitary_deviation(u):
    return (np.abs(u.conj().T @ u - np.eye(4)).max(),
            abs(np.linalg.det(u) - 1.0))


def test_su4_factor_sequence():
    assert SU4_GENERATOR_SEQUENCE == (3, 2, 3, 5, 3, 10, 3, 2, 3, 5, 3, 2, 3, 8, 15)


def test_compose_su2_identity():
    assert np.abs(compose_su2(0.0, 0.0, 0.0) - np.eye(4)).max() < 1e-16


def test_compose_su2_quarter_rotation():
    u = compose_su2(0.0, np.pi / 2, 0.0)
    expected = np.eye(4, dtype=complex)
    expected[:2, :2] = [[0.0, 1.0], [-1.0, 0.0]]
    assert np.abs(u - expected).max() < 1e-15


def test_compose_su2_diagonal_phases():
    u = compose_su2(np.pi / 2, 0.0, np.pi / 2)
    assert np.abs(u - np.diag([-1.0, -1.0, 1.0, 1.0])).max() < 1e-15


def test_compose_su3_identity():
    assert np.abs(compose_su3(np.zeros(8)) - np.eye(4)).max() < 1e-16


def test_compose_su3_lambda8_phase():
    a14 = 0.83
    u = compose_su3([0, 0, 0, 0, 0, 0, 0, a14])
    expected = np.diag(np.exp(1j * np.array([1, 1, -2, 0]) * a14 / np.sqrt(3)))
    assert np.abs(u - expected).max() < 1e-15


def test_compose_su3_embedding_pattern():
    rng = np.random.default_rng(5)
    for _ in range(20):
        u = compose_su3(rng.uniform(0, np.pi, 8))
        assert np.abs(u[3, :3]).max() < 1e-15
        assert np.abs(u[:3, 3]).max() < 1e-15
        assert abs(u[3, 3] - 1.0) < 1e-15
        dev_u, dev_d = special_unitary_deviation(u)
        assert dev_u < 1e-13 and dev_d < 1e-13


def test_compose_su4_identity_and_single_factor():
    assert np.abs(compose_su4(np.zeros(15)) - np.eye(4)).max() < 1e-16
    angles = np.zeros(15)
    angles[0] = np.pi
    assert np.abs(compose_su4(angles) - np.diag([-1, -1, 1, 1])).max() < 1e-15


def test_compose_su4_special_unitary_random():
    rng = np.random.default_rng(12)
    profile = range_profile("su4", "covering")
    lengths = profile.lengths()
    for _ in range(10_000):
        u = compose_su4(lengths * rng.random(15))
        dev_u, dev_d = special_unitary_deviation(u)
        assert dev_u <= 1e-12
        assert dev_d <= 1e-12


def test_compose_su4_restricts_to_su3():
    rng = np.random.default_rng(3)
    for _ in range(20):
        middle = rng.uniform(0, np.pi, 8)
        full = np.zeros(15)
        full[6:14] = middle
        assert np.abs(compose_su4(full) - compose_su3(middle)).max() < 1e-14


def test_compose_su4_angle_count():
    with pytest.raises(ValueError):
        compose_su4(np.zeros(12))


def test_volume_profile_bounds_exact():
    p4 = range_profile("su4", "volume")
    assert p4.bounds[14][1] == np.pi / np.sqrt(6.0)
    assert p4.bounds[13][1] == np.pi / np.sqrt(3.0)
    assert p4.bounds[0] == (0.0, np.pi)
    assert p4.bounds[1] == (0.0, np.pi / 2.0)
    p3 = range_profile("su3", "volume")
    assert p3.bounds[7][1] == np.pi / np.sqrt(3.0)
    assert p3.dim == 8


def test_covering_profile_bounds_exact():
    p4 = range_profile("su4", "covering")
    assert p4.bounds[14][1] == 2.0 * np.sqrt(2.0 / 3.0) * np.pi
    assert p4.bounds[13][1] == np.sqrt(3.0) * np.pi
    assert p4.bounds[2] == (0.0, 2.0 * np.pi)
    p2 = range_profile("su2", "covering")
    assert p2.bounds[2] == (0.0, 2.0 * np.pi)


def test_covering_to_volume_length_ratios():
    vol = range_profile("su4", "volume").lengths()
    cov = range_profile("su4", "covering").lengths()
    expected = np.array([1, 1, 2, 1, 2, 1, 1, 1, 2, 1, 1, 1, 2, 3, 4], dtype=float)
    assert np.abs(cov / vol - expected).max() < 1e-14


def test_profile_bounds_ordered():
    for group in ("su2", "su3", "su4"):
        for kind in ("volume", "covering"):
            profile = range_profile(group, kind)
            assert all(lo <= hi for lo, hi in profile.bounds)
            assert all(lo == 0.0 for lo, _ in profile.bounds)


def test_profile_validation():
    with pytest.raises(ValueError):
        range_profile("su5", "volume")
    with pytest.raises(ValueError):
        range_profile("su4", "haar")
