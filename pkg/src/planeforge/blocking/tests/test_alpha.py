# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Tests of the alpha map
----------------------
"""
from numpy.testing import assert_equal

import pytest

from planeforge.exceptions import DomainError
from planeforge.field.gf import field_from_order
from planeforge.geometry.plane import build_plane
from planeforge.geometry.affine import affine_frame
from planeforge.geometry.point_set import PointSet
from planeforge.blocking.properties import (
    is_blocking_projective, is_blocking_affine, is_minimal, is_semioval,
    has_r_infinity_property, has_pi_property, has_pi_strong_property)
from planeforge.blocking.constructions import (
    vertexless_triangles, vertexless_triangle, pick_triangle, k_construction,
    baer_patch_q4, affine_3q4, affine_3q6)
from planeforge.blocking.alpha import alpha, alpha_inverse

pg3 = build_plane(field_from_order(3))
pg4 = build_plane(field_from_order(4))
pg5 = build_plane(field_from_order(5))


def test_round_trip_on_pg3_triangles():
    for S in vertexless_triangles(pg3)[::13]:
        for P in S:
            frame, image = alpha(pg3, S, P)
            assert_equal(frame.r_inf, has_r_infinity_property(pg3, S, P))
            assert_equal(image.size, 5)
            assert is_blocking_affine(frame, image)
            assert is_minimal(frame, image)
            assert has_pi_property(frame, image, P)
            # semiovals map to sets with the strong Pi-property
            assert has_pi_strong_property(frame, image, P)
            assert_equal(alpha_inverse(frame, image, P), S)


def test_round_trip_on_baer_patch():
    S, T, tangent = baer_patch_q4(pg4)
    frame, image = alpha(pg4, S, T)
    assert_equal(frame.r_inf, tangent)
    assert is_minimal(frame, image)
    assert has_pi_property(frame, image, T)
    assert not is_semioval(pg4, S)
    assert_equal(alpha_inverse(frame, image, T), S)


def test_smallest_affine_blocking_set_lifts_to_triangle():
    frame = affine_frame(pg3, 0)
    S, trace = affine_3q4(frame)
    assert_equal(S.size, 5)
    lifted = alpha_inverse(frame, S, trace.direction)
    assert_equal(lifted.size, 6)
    assert is_semioval(pg3, lifted)
    assert_equal(has_r_infinity_property(pg3, lifted, trace.direction), 0)


def test_alpha_inverse_of_affine_3q4():
    frame = affine_frame(pg5, 0)
    S, trace = affine_3q4(frame)
    lifted = alpha_inverse(frame, S, trace.direction)
    assert_equal(lifted.size, 12)
    assert is_blocking_projective(pg5, lifted)
    assert is_semioval(pg5, lifted)
    assert_equal(has_r_infinity_property(pg5, lifted, trace.direction),
                 frame.r_inf)


def test_alpha_inverse_of_affine_3q6():
    frame = affine_frame(pg5, 0)
    S, trace = affine_3q6(frame)
    lifted = alpha_inverse(frame, S, trace.direction)
    assert_equal(lifted.size, 10)
    assert is_minimal(pg5, lifted)
    assert_equal(has_r_infinity_property(pg5, lifted, trace.direction),
                 frame.r_inf)
    assert not is_semioval(pg5, lifted)


def test_alpha_preconditions():
    S, _ = k_construction(pg5, 3)
    with pytest.raises(DomainError, match="r_inf-property"):
        alpha(pg5, S, S.ids()[0])
    triangle, _ = vertexless_triangle(pg5, *pick_triangle(pg5))
    outside = next(P for P in range(pg5.num_points)
                   if not triangle.contains(P))
    with pytest.raises(DomainError, match="not in the set"):
        alpha(pg5, triangle, outside)
    with pytest.raises(DomainError, match="minimal"):
        alpha(pg5, triangle.add(outside), outside)
    line = PointSet(pg5, pg5.line_mask(0))
    with pytest.raises(DomainError, match="blocking"):
        alpha(pg5, line, line.ids()[0])


def test_alpha_inverse_preconditions():
    frame = affine_frame(pg5, 0)
    P_dir, other = frame.infinite_points[:2]
    l1 = frame.parallel_class(P_dir)[0]
    l2 = frame.parallel_class(other)[0]
    two_lines = PointSet(pg5, frame.line_mask(l1) | frame.line_mask(l2))
    with pytest.raises(DomainError, match="Pi-property"):
        alpha_inverse(frame, two_lines, P_dir)
    affine_point = two_lines.ids()[0]
    with pytest.raises(DomainError, match="r_inf"):
        alpha_inverse(frame, two_lines, affine_point)
    S, trace = affine_3q4(frame)
    with pytest.raises(DomainError, match="blocking"):
        alpha_inverse(frame, S.remove(S.ids()[0]), trace.direction)
