# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Point sets
----------
"""
from planeforge.exceptions import DomainError, UsageError
from planeforge.geometry.plane import ids_to_mask, mask_to_ids


class PointSet:
    """Immutable set of points of a plane stored as a bitmask.

    Parameters
    ----------
    plane : Plane
        Ambient projective plane (also for sets living in an AffineFrame).
    mask : int, opt
        Bit i set iff point id i belongs to the set.
    """

    __slots__ = ("_plane", "_mask")

    def __init__(self, plane, mask=0):
        mask = int(mask)
        if mask < 0 or mask >> plane.num_points:
            raise DomainError(f"mask references point ids outside "
                              f"[0, {plane.num_points})")
        self._plane = plane
        self._mask = mask

    @classmethod
    def from_ids(cls, plane, ids):
        ids = [int(P) for P in ids]
        for P in ids:
            if not 0 <= P < plane.num_points:
                raise DomainError(f"point id {P} outside "
                                  f"[0, {plane.num_points})")
        return cls(plane, ids_to_mask(ids))

    @classmethod
    def from_coords(cls, plane, triples):
        return cls.from_ids(plane, [plane.point_id(t) for t in triples])

    @property
    def plane(self):
        return self._plane

    @property
    def mask(self):
        return self._mask

    @property
    def size(self):
        return self._mask.bit_count()

    def __len__(self):
        return self.size

    def ids(self):
        """Sorted point ids."""
        return mask_to_ids(self._mask)

    def coords(self):
        return [self._plane.point_coords(P) for P in self.ids()]

    def __iter__(self):
        return iter(self.ids())

    def contains(self, P):
        return P >= 0 and bool(self._mask >> P & 1)

    __contains__ = contains

    def _check_point(self, P):
        if not 0 <= P < self._plane.num_points:
            raise DomainError(f"point id {P} outside "
                              f"[0, {self._plane.num_points})")

    def _check_other(self, other):
        if not isinstance(other, PointSet):
            raise UsageError(f"expected PointSet, got {type(other).__name__}")
        if other._plane != self._plane:
            raise UsageError("point sets live in different planes")

    def add(self, P):
        self._check_point(P)
        return PointSet(self._plane, self._mask | 1 << P)

    def remove(self, P):
        if not self.contains(P):
            raise DomainError(f"point {P} is not in the set")
        return PointSet(self._plane, self._mask & ~(1 << P))

    def union(self, other):
        self._check_other(other)
        return PointSet(self._plane, self._mask | other._mask)

    def difference(self, other):
        self._check_other(other)
        return PointSet(self._plane, self._mask & ~other._mask)

    def intersection(self, other):
        self._check_other(other)
        return PointSet(self._plane, self._mask & other._mask)

    __or__ = union
    __sub__ = difference
    __and__ = intersection

    def issubset(self, other):
        self._check_other(other)
        return self._mask & ~other._mask == 0

    def restricted_to(self, frame):
        """The points of the set that are affine in frame."""
        return PointSet(self._plane, self._mask & frame.point_mask)

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._plane == other._plane and self._mask == other._mask

    def __hash__(self):
        return hash((self._plane, self._mask))

    def __repr__(self):
        return f"PointSet(q={self._plane.order}, ids={self.ids()})"
