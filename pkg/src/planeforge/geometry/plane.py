# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Projective plane
----------------
The Desarguesian projective plane PG(2,q) built from homogeneous
coordinates over GF(q).

Points are normalized triples (x0, x1, x2): the first nonzero coordinate
is 1. Their ids follow the lexicographic order of the normalized triples
with x0 most significant, so id 0 is (0, 0, 1), ids 1..q are (0, 1, x)
and the remaining q² ids are (1, x, y). Lines are the normalized dual
triples (a0, a1, a2) in the same order; a point lies on a line iff
a0·x0 + a1·x1 + a2·x2 = 0.

Point sets and line members are Python integers used as bitmasks over
point ids.
"""
import functools
import itertools
import logging

import numpy as np

from planeforge.constants import MAX_PLANE_ORDER, PAIR_TABLE_MAX_ORDER
from planeforge.exceptions import DomainError

logger = logging.getLogger(__name__)


def ids_to_mask(ids):
    mask = 0
    for i in ids:
        mask |= 1 << int(i)
    return mask


def mask_to_ids(mask):
    """Sorted ids of the bits set in mask."""
    ids = []
    while mask:
        low = mask & -mask
        ids.append(low.bit_length() - 1)
        mask ^= low
    return ids


def normalize(field, triple):
    """Scale a homogeneous triple so its first nonzero coordinate is 1.

    Parameters
    ----------
    field : FieldSpec
        Coordinate field.
    triple : sequence of int
        Element indices (x0, x1, x2).

    Returns
    -------
    tuple of int

    Raises
    ------
    DomainError
        If the triple is the zero vector or holds an invalid element.
    """
    triple = tuple(int(x) for x in triple)
    if len(triple) != 3:
        raise DomainError(f"homogeneous coordinates need 3 entries, "
                          f"got {len(triple)}")
    if any(not 0 <= x < field.q for x in triple):
        raise DomainError(f"coordinates {triple} outside GF({field.q})")
    lead = next((x for x in triple if x != 0), None)
    if lead is None:
        raise DomainError("the zero vector is not a projective point")
    scale = field.inv_idx(lead)
    return tuple(int(x) for x in field.mul_idx(np.asarray(triple), scale))


def _canonical_triples(q):
    triples = [t for t in itertools.product(range(q), repeat=3)
               if next((x for x in t if x != 0), 0) == 1]
    return np.array(triples, dtype=np.int64)


class Plane:
    """Incidence structure of PG(2,q).

    Attributes
    ----------
    field : FieldSpec
        Coordinate field GF(q).
    order : int
        q.
    num_points : int
        q² + q + 1 (also the number of lines).
    points : ndarray, shape (num_points, 3)
        Normalized coordinates of every point, indexed by id.
    lines : ndarray, shape (num_points, 3)
        Normalized dual coordinates of every line, indexed by id.
    incidence : ndarray of bool, shape (num_lines, num_points)
        incidence[l, P] is True when P lies on l.
    """

    is_projective = True

    def __init__(self, field):
        q = field.q
        if q > MAX_PLANE_ORDER:
            raise DomainError(f"plane order {q} exceeds the maximum "
                              f"{MAX_PLANE_ORDER}")
        self._field = field
        self._q = q
        self._points = _canonical_triples(q)
        self._lines = self._points.copy()
        n = len(self._points)
        self._n = n

        self._point_index = {tuple(int(x) for x in t): i
                             for i, t in enumerate(self._points)}

        incidence = np.empty((n, n), dtype=bool)
        for l, coeffs in enumerate(self._lines):
            incidence[l] = self._dot(coeffs[None, :], self._points) == 0
        self._incidence = incidence

        self._line_points = np.array(
            [np.flatnonzero(row) for row in incidence], dtype=np.int64)
        self._point_lines = np.array(
            [np.flatnonzero(col) for col in incidence.T], dtype=np.int64)
        self._members = tuple(ids_to_mask(row) for row in self._line_points)
        self._point_mask = (1 << n) - 1

        self._pair_table = None
        self._meet_table = None
        if q <= PAIR_TABLE_MAX_ORDER:
            self._pair_table = np.full((n, n), -1, dtype=np.int64)
            self._meet_table = np.full((n, n), -1, dtype=np.int64)
            for l, pts in enumerate(self._line_points):
                self._pair_table[np.ix_(pts, pts)] = l
            for P, ls in enumerate(self._point_lines):
                self._meet_table[np.ix_(ls, ls)] = P
            diag = np.arange(n)
            self._pair_table[diag, diag] = -1
            self._meet_table[diag, diag] = -1

        logger.debug("Built PG(2,%d): %d points, %d lines", q, n, n)

    def _dot(self, u, v):
        f = self._field
        prod = f.mul_idx(u, v)
        return f.add_idx(f.add_idx(prod[..., 0], prod[..., 1]), prod[..., 2])

    def _cross(self, u, v):
        f = self._field
        u = np.asarray(u)
        v = np.asarray(v)
        return np.array([
            f.sub_idx(f.mul_idx(u[1], v[2]), f.mul_idx(u[2], v[1])),
            f.sub_idx(f.mul_idx(u[2], v[0]), f.mul_idx(u[0], v[2])),
            f.sub_idx(f.mul_idx(u[0], v[1]), f.mul_idx(u[1], v[0])),
        ])

    @property
    def field(self):
        return self._field

    @property
    def order(self):
        return self._q

    q = order

    @property
    def num_points(self):
        return self._n

    @property
    def num_lines(self):
        return self._n

    @property
    def points(self):
        return self._points

    @property
    def lines(self):
        return self._lines

    @property
    def incidence(self):
        return self._incidence

    @property
    def point_mask(self):
        """Mask with every point of the plane."""
        return self._point_mask

    @property
    def line_ids(self):
        return range(self._n)

    @property
    def plane(self):
        return self

    def line_mask(self, l):
        """Members of line l as a bitmask."""
        return self._members[l]

    @property
    def line_masks(self):
        return self._members

    def lines_through(self, P):
        """Ids of the q + 1 lines incident with point P."""
        return tuple(int(l) for l in self._point_lines[P])

    def points_on(self, l):
        """Ids of the q + 1 points of line l."""
        return tuple(int(P) for P in self._line_points[l])

    def point_coords(self, P):
        return tuple(int(x) for x in self._points[P])

    def line_coords(self, l):
        return tuple(int(a) for a in self._lines[l])

    def point_id(self, triple):
        """Id of the point with homogeneous coordinates triple."""
        return self._point_index[normalize(self._field, triple)]

    def line_id(self, triple):
        """Id of the line with dual coordinates triple."""
        return self._point_index[normalize(self._field, triple)]

    def is_on(self, P, l):
        return bool(self._incidence[l, P])

    def check_point(self, P):
        if not 0 <= P < self._n:
            raise DomainError(f"point id {P} outside [0, {self._n})")

    def check_line(self, l):
        if not 0 <= l < self._n:
            raise DomainError(f"line id {l} outside [0, {self._n})")

    def line_through(self, P, Q):
        """Unique line joining two distinct points.

        Raises
        ------
        DomainError
            If P = Q.
        """
        self.check_point(P)
        self.check_point(Q)
        if P == Q:
            raise DomainError(f"line_through needs distinct points, "
                              f"got {P} twice")
        if self._pair_table is not None:
            return int(self._pair_table[P, Q])
        return self.line_id(self._cross(self._points[P], self._points[Q]))

    def meet(self, l, m):
        """Unique common point of two distinct lines.

        Raises
        ------
        DomainError
            If l = m.
        """
        self.check_line(l)
        self.check_line(m)
        if l == m:
            raise DomainError(f"meet needs distinct lines, got {l} twice")
        if self._meet_table is not None:
            return int(self._meet_table[l, m])
        return self.point_id(self._cross(self._lines[l], self._lines[m]))

    def collinear(self, P, Q, R):
        return bool(self._incidence[:, [P, Q, R]].all(axis=1).any())

    def concurrent(self, l, m, n):
        return bool(self._incidence[[l, m, n]].all(axis=0).any())

    def __eq__(self, other):
        if not isinstance(other, Plane):
            return NotImplemented
        return self._field == other._field

    def __hash__(self):
        return hash(("PG2", self._field))

    def __repr__(self):
        return f"PG(2,{self._q}) over {self._field!r}"


@functools.lru_cache(maxsize=None)
def build_plane(field):
    """Build PG(2,q) over the given field.

    Construction is deterministic and cached per field.
    """
    return Plane(field)


def line_through(plane, P, Q):
    return plane.line_through(P, Q)


def meet(plane, l, m):
    return plane.meet(l, m)


def plane_dump(plane):
    """Text dump of the incidence structure.

    One ``point <id> <x0> <x1> <x2>`` record per point followed by one
    ``line <id> <a0> <a1> <a2> : <ids...>`` record per line, elements as
    integer indices.
    """
    records = []
    for P in range(plane.num_points):
        x0, x1, x2 = plane.point_coords(P)
        records.append(f"point {P} {x0} {x1} {x2}")
    for l in range(plane.num_lines):
        a0, a1, a2 = plane.line_coords(l)
        members = " ".join(str(P) for P in plane.points_on(l))
        records.append(f"line {l} {a0} {a1} {a2} : {members}")
    return "\n".join(records) + "\n"
