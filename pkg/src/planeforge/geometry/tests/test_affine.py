# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Tests of affine frames and point sets
-------------------------------------
"""
from numpy.testing import assert_equal

import pytest

from planeforge.exceptions import DomainError, UsageError
from planeforge.field.gf import field_from_order
from planeforge.geometry.plane import build_plane
from planeforge.geometry.affine import affine_frame
from planeforge.geometry.point_set import PointSet

pg3 = build_plane(field_from_order(3))
pg4 = build_plane(field_from_order(4))
pg5 = build_plane(field_from_order(5))


@pytest.mark.parametrize("q, affine_lines", [(3, 12), (4, 20), (5, 30)])
def test_frame_counts(q, affine_lines):
    plane = build_plane(field_from_order(q))
    for r_inf in (0, plane.num_lines - 1):
        frame = affine_frame(plane, r_inf)
        assert_equal(frame.point_mask.bit_count(), q * q)
        assert_equal(len(frame.line_ids), affine_lines)
        assert_equal(len(frame.directions), q + 1)
        for parallel_class in frame.directions.values():
            assert_equal(len(parallel_class), q)


@pytest.mark.parametrize("plane", [pg3, pg4, pg5])
def test_parallel_classes_partition(plane):
    frame = affine_frame(plane, 3)
    q = plane.order
    seen = []
    for P, parallel_class in frame.directions.items():
        covered = 0
        for l in parallel_class:
            members = frame.line_mask(l)
            assert_equal(members.bit_count(), q)
            # pairwise disjoint on affine points
            assert_equal(covered & members, 0)
            covered |= members
            assert plane.is_on(P, l)
        assert_equal(covered, frame.point_mask)
        seen.extend(parallel_class)
    assert_equal(sorted(seen), sorted(frame.line_ids))


def test_frame_queries():
    frame = affine_frame(pg3, 0)
    P_dir = frame.infinite_points[0]
    assert frame.is_on_r_inf(P_dir)
    assert not frame.is_affine(P_dir)
    for l in frame.parallel_class(P_dir):
        assert_equal(frame.direction_of(l), P_dir)
    affine_point = next(P for P in range(pg3.num_points) if frame.is_affine(P))
    assert_equal(len(frame.lines_through(affine_point)), 4)
    with pytest.raises(DomainError):
        frame.line_mask(0)
    with pytest.raises(DomainError):
        frame.parallel_class(affine_point)
    with pytest.raises(DomainError):
        frame.lines_through(P_dir)
    with pytest.raises(DomainError):
        affine_frame(pg3, 13)


def test_point_set_algebra():
    S = PointSet.from_ids(pg3, [0, 4, 7])
    assert_equal(S.size, 3)
    assert_equal(S.ids(), [0, 4, 7])
    assert 4 in S and 5 not in S
    T = S.add(5).remove(0)
    assert_equal(T.ids(), [4, 5, 7])
    assert_equal(S.union(T).ids(), [0, 4, 5, 7])
    assert_equal(S.difference(T).ids(), [0])
    assert_equal(S.intersection(T).ids(), [4, 7])
    assert S.intersection(T).issubset(S)
    assert_equal(S, PointSet(pg3, S.mask))
    assert_equal(len({S, PointSet.from_ids(pg3, [7, 4, 0])}), 1)


def test_point_set_errors():
    S = PointSet.from_ids(pg3, [1, 2])
    with pytest.raises(DomainError):
        S.remove(3)
    with pytest.raises(DomainError):
        S.add(13)
    with pytest.raises(DomainError):
        PointSet.from_ids(pg3, [13])
    with pytest.raises(DomainError):
        PointSet(pg3, 1 << 13)
    with pytest.raises(UsageError):
        S.union(PointSet(pg4, 1))


def test_from_coords_and_restriction():
    S = PointSet.from_coords(pg3, [(0, 0, 1), (2, 2, 0), (1, 1, 1)])
    assert_equal(S.coords(), [(0, 0, 1), (1, 1, 0), (1, 1, 1)])
    r_inf = pg3.line_id((0, 0, 1))
    frame = affine_frame(pg3, r_inf)
    # (1, 1, 0) lies on z = 0
    assert_equal(S.restricted_to(frame).coords(), [(0, 0, 1), (1, 1, 1)])
