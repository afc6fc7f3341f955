"""Domain models: membership, Cayley transform, transvections, distances."""

from __future__ import annotations

import numpy as np
import pytest

from siegelmaps import (
    DomainPoint,
    MembershipStatus,
    ball_distance,
    ball_infinitesimal_metric,
    ball_point,
    cayley,
    cayley_to_bounded,
    cayley_to_siegel,
    kobayashi_distance,
    membership,
    siegel_shape,
    transvection_to_origin,
    type_i_shape,
    type_iii_shape,
)
from siegelmaps.errors import (
    IllConditioned,
    MembershipViolation,
    ShapeMismatch,
    SingularCayley,
)
from siegelmaps.linalg import max_abs
from siegelmaps.sampling import generator, sample_ball_point, sample_siegel, sample_type_i, sample_type_iii

ARCTANH_HALF = 0.5493061443340549


def test_membership_origin_type_iii():
    pt = DomainPoint(type_iii_shape(3), np.zeros((3, 3)))
    result = membership(pt)
    assert result.status is MembershipStatus.INTERIOR
    assert result.margin == pytest.approx(1.0)


def test_membership_boundary_unit_column():
    pt = DomainPoint(type_i_shape(2, 1), np.array([[1.0], [0.0]]))
    assert membership(pt).status is MembershipStatus.BOUNDARY


def test_membership_margin_of_scaled_identity():
    z = 0.9 * np.eye(2, dtype=complex)
    result = membership(DomainPoint(type_iii_shape(2), z))
    # defining matrix I - conj(z) z = 0.19 I, eigenvalues computed directly
    assert result.status is MembershipStatus.INTERIOR
    assert result.margin == pytest.approx(0.19, abs=1e-12)


def test_membership_outside():
    pt = DomainPoint(type_i_shape(2, 2), 1.5 * np.eye(2, dtype=complex))
    assert membership(pt).status is MembershipStatus.OUTSIDE


def test_membership_flags_asymmetric_square_kinds():
    z = np.array([[0.0, 0.2], [0.0, 0.0]])
    result = membership(DomainPoint(type_iii_shape(2), z))
    assert result.status is MembershipStatus.OUTSIDE
    assert "symmetric" in result.reason


def test_membership_siegel_uses_imaginary_part():
    z = np.array([[1.0 + 1.0j, 0.0], [0.0, 2.0 + 0.5j]])
    result = membership(DomainPoint(siegel_shape(2), z))
    assert result.status is MembershipStatus.INTERIOR
    assert result.margin == pytest.approx(0.5)


def test_membership_transpose_invariant_margins():
    rng = generator(11, 0)
    for _ in range(20):
        pt = sample_type_i(rng, 3, 2)
        flipped = DomainPoint(type_i_shape(2, 3), pt.z.T)
        assert membership(pt).margin == pytest.approx(membership(flipped).margin, abs=1e-12)


def test_cayley_center_maps_to_origin():
    for g in (1, 2, 4):
        center = DomainPoint(siegel_shape(g), 1j * np.eye(g))
        image = cayley_to_bounded(center)
        assert max_abs(image.z) <= 1e-15


def test_cayley_round_trip_seeded():
    rng = generator(12, 0)
    for g in (1, 2, 3, 5):
        for _ in range(20):
            pt = sample_type_iii(rng, g)
            back = cayley_to_bounded(cayley_to_siegel(pt))
            assert max_abs(back.z - pt.z) <= 1e-11
            sg = sample_siegel(rng, g)
            back_sg = cayley_to_siegel(cayley_to_bounded(sg))
            assert max_abs(back_sg.z - sg.z) <= 1e-9 * max(1.0, max_abs(sg.z))


def test_cayley_explicit_diagonal_point():
    z = np.diag([1.0 + 1.0j, 1.0j])
    pt = DomainPoint(siegel_shape(2), z)
    image = cayley_to_bounded(pt)
    # direct formula evaluation: (Z - iI)(Z + iI)^{-1}, diagonal case
    expected = np.diag([1.0 / (1.0 + 2.0j), 0.0])
    assert np.allclose(image.z, expected, atol=1e-12)
    assert membership(image).status is MembershipStatus.INTERIOR


def test_cayley_rejects_wrong_kind():
    pt = DomainPoint(type_iii_shape(2), np.zeros((2, 2)))
    with pytest.raises(ShapeMismatch):
        cayley_to_bounded(pt)
    with pytest.raises(ShapeMismatch):
        cayley_to_siegel(DomainPoint(siegel_shape(2), 1j * np.eye(2)))


def test_cayley_rejects_non_interior():
    pt = DomainPoint(siegel_shape(2), np.zeros((2, 2)))
    with pytest.raises(MembershipViolation):
        cayley_to_bounded(pt)


def test_cayley_dispatch_directions():
    pt = DomainPoint(siegel_shape(2), 1j * np.eye(2))
    bounded = cayley(pt, "to-bounded")
    assert max_abs(cayley(bounded, "to-siegel").z - pt.z) <= 1e-12
    with pytest.raises(ValueError):
        cayley(pt, "sideways")


def test_transvection_at_origin_is_identity():
    rng = generator(13, 0)
    origin = DomainPoint(type_i_shape(2, 2), np.zeros((2, 2)))
    handle = transvection_to_origin(origin)
    for _ in range(10):
        pt = sample_type_i(rng, 2, 2)
        assert max_abs(handle.apply(pt).z - pt.z) <= 1e-12


def test_transvection_moves_base_to_origin():
    rng = generator(14, 0)
    for _ in range(20):
        p, q = int(rng.integers(1, 4)), int(rng.integers(1, 4))
        pt = sample_type_i(rng, p, q)
        handle = transvection_to_origin(pt)
        assert max_abs(handle.apply(pt).z) <= 1e-12


def test_transvection_preserves_membership():
    rng = generator(15, 0)
    base = sample_type_i(rng, 3, 2)
    handle = transvection_to_origin(base)
    for _ in range(25):
        pt = sample_type_i(rng, 3, 2)
        assert membership(handle.apply(pt)).status is MembershipStatus.INTERIOR


def test_transvection_preserves_distance():
    # oracle for invariance: the closed-form distance itself
    rng = generator(16, 0)
    for _ in range(10):
        p, q = int(rng.integers(1, 5)), int(rng.integers(1, 5))
        a = sample_type_i(rng, p, q)
        x = sample_type_i(rng, p, q)
        y = sample_type_i(rng, p, q)
        handle = transvection_to_origin(a)
        d_before = kobayashi_distance(x, y)
        d_after = kobayashi_distance(handle.apply(x), handle.apply(y))
        assert d_after == pytest.approx(d_before, abs=1e-9)


def test_transvection_rejects_boundary_base():
    pt = DomainPoint(type_i_shape(2, 1), np.array([[1.0], [0.0]]))
    with pytest.raises((MembershipViolation, IllConditioned)):
        transvection_to_origin(pt)


def test_distance_zero_at_equal_points():
    z = ball_point([0.2, 0.1j])
    assert ball_distance(z, z) == pytest.approx(0.0, abs=1e-12)


def test_distance_poincare_on_disk():
    assert ball_distance(ball_point([0.0]), ball_point([0.5])) == pytest.approx(ARCTANH_HALF, abs=1e-12)


def test_distance_diagonal_type_i():
    x = DomainPoint(type_i_shape(2, 2), np.zeros((2, 2)))
    y = DomainPoint(type_i_shape(2, 2), np.diag([0.5, 0.3]).astype(complex))
    assert kobayashi_distance(x, y) == pytest.approx(np.arctanh(0.5), abs=1e-12)


def test_distance_symmetry():
    rng = generator(17, 0)
    for _ in range(15):
        x = sample_type_i(rng, 3, 2)
        y = sample_type_i(rng, 3, 2)
        assert kobayashi_distance(x, y) == pytest.approx(kobayashi_distance(y, x), abs=1e-10)


def test_distance_triangle_inequality():
    rng = generator(18, 0)
    for _ in range(15):
        x = sample_type_i(rng, 2, 2)
        y = sample_type_i(rng, 2, 2)
        w = sample_type_i(rng, 2, 2)
        dxy = kobayashi_distance(x, y)
        dxw = kobayashi_distance(x, w)
        dwy = kobayashi_distance(w, y)
        assert dxy <= dxw + dwy + 1e-8


def test_distance_decreases_under_column_deletion():
    rng = generator(19, 0)
    for _ in range(15):
        x = sample_type_i(rng, 3, 3)
        y = sample_type_i(rng, 3, 3)
        kept = DomainPoint(type_i_shape(3, 2), x.z[:, :2])
        kept_y = DomainPoint(type_i_shape(3, 2), y.z[:, :2])
        assert kobayashi_distance(kept, kept_y) <= kobayashi_distance(x, y) + 1e-8


def test_distance_rejects_shape_mismatch():
    x = DomainPoint(type_i_shape(2, 2), np.zeros((2, 2)))
    y = DomainPoint(type_i_shape(2, 1), np.zeros((2, 1)))
    with pytest.raises(ShapeMismatch):
        kobayashi_distance(x, y)


def test_distance_on_siegel_points_via_cayley():
    rng = generator(20, 0)
    x = sample_siegel(rng, 2)
    y = sample_siegel(rng, 2)
    direct = kobayashi_distance(x, y)
    through = kobayashi_distance(cayley_to_bounded(x), cayley_to_bounded(y))
    assert direct == pytest.approx(through, abs=1e-10)


def test_infinitesimal_metric_at_origin():
    x = ball_point([0.0, 0.0])
    assert ball_infinitesimal_metric(x, [1.0, 0.0]) == pytest.approx(1.0)
    assert ball_infinitesimal_metric(x, [2.0, 0.0]) == pytest.approx(2.0)


def test_infinitesimal_metric_radial_factor():
    x = ball_point([0.5, 0.0])
    assert ball_infinitesimal_metric(x, [1.0, 0.0]) == pytest.approx(1.0 / 0.75, abs=1e-12)


def test_infinitesimal_metric_matches_transvection_derivative():
    # oracle: push the vector to the origin with the derivative of the
    # transvection (finite differences) and take the Euclidean norm there
    rng = generator(21, 0)
    for _ in range(10):
        x = sample_ball_point(rng, 3, 0.8)
        v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        handle = transvection_to_origin(x)
        h = 1e-7
        bumped = DomainPoint(type_i_shape(3, 1), (x.coords + h * v).reshape(-1, 1))
        derivative = handle.apply(bumped).z.reshape(-1) / h
        assert ball_infinitesimal_metric(x, v) == pytest.approx(
            float(np.linalg.norm(derivative)), rel=1e-5
        )


def test_ball_point_rejects_norm_one():
    with pytest.raises(MembershipViolation):
        ball_point([1.0, 0.0])


def test_siegel_cayley_singular_guard():
    # bounded point with eigenvalue pinned at 1 - eps along the real axis
    z = np.diag([1.0 - 1e-14, 0.0]).astype(complex)
    pt = DomainPoint(type_iii_shape(2), z)
    with pytest.raises((SingularCayley, MembershipViolation)):
        cayley_to_siegel(pt)
