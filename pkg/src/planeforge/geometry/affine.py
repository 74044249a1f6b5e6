# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Affine frame
------------
AG(2,q) obtained from PG(2,q) by deleting a line r_inf and its points.
Every point P of r_inf is a direction: the q affine lines through P form
the parallel class of P.
"""
import logging

from planeforge.exceptions import DomainError

logger = logging.getLogger(__name__)


class AffineFrame:
    """A projective plane together with a designated line at infinity.

    Affine lines are the lines of the plane other than r_inf, restricted
    to the affine points, so they keep their projective ids.

    Attributes
    ----------
    plane : Plane
        Ambient projective plane.
    r_inf : int
        Id of the removed line.
    point_mask : int
        Bitmask of the q² affine points.
    directions : dict
        Point id on r_inf -> tuple of the q affine line ids through it.
    """

    is_projective = False

    def __init__(self, plane, r_inf):
        r_inf = int(r_inf)
        if not 0 <= r_inf < plane.num_lines:
            raise DomainError(f"line id {r_inf} outside "
                              f"[0, {plane.num_lines})")
        self._plane = plane
        self._r_inf = r_inf
        self._inf_mask = plane.line_mask(r_inf)
        self._point_mask = plane.point_mask & ~self._inf_mask

        self._line_ids = tuple(l for l in plane.line_ids if l != r_inf)
        self._members = {l: plane.line_mask(l) & self._point_mask
                         for l in self._line_ids}

        self._directions = {}
        self._direction_of = {}
        for P in plane.points_on(r_inf):
            parallel_class = tuple(l for l in plane.lines_through(P)
                                   if l != r_inf)
            self._directions[P] = parallel_class
            for l in parallel_class:
                self._direction_of[l] = P

        logger.debug("Affine frame of %r with r_inf=%d", plane, r_inf)

    @property
    def plane(self):
        return self._plane

    @property
    def field(self):
        return self._plane.field

    @property
    def order(self):
        return self._plane.order

    q = order

    @property
    def r_inf(self):
        return self._r_inf

    @property
    def point_mask(self):
        """Mask of the affine points."""
        return self._point_mask

    affine_points = point_mask

    @property
    def infinite_mask(self):
        """Mask of the points of r_inf."""
        return self._inf_mask

    @property
    def infinite_points(self):
        return tuple(self._directions)

    @property
    def line_ids(self):
        return self._line_ids

    @property
    def directions(self):
        return self._directions

    def line_mask(self, l):
        """Affine members of line l."""
        try:
            return self._members[l]
        except KeyError:
            raise DomainError(f"line {l} is not an affine line of this "
                              f"frame (r_inf={self._r_inf})") from None

    def lines_through(self, P):
        """The q + 1 affine lines through the affine point P."""
        if not self.is_affine(P):
            raise DomainError(f"point {P} lies on r_inf")
        return self._plane.lines_through(P)

    def parallel_class(self, P_dir):
        """The q affine lines through the point P_dir of r_inf."""
        try:
            return self._directions[P_dir]
        except KeyError:
            raise DomainError(f"point {P_dir} is not on r_inf "
                              f"(line {self._r_inf})") from None

    def direction_of(self, l):
        """Point of r_inf through which the affine line l passes."""
        try:
            return self._direction_of[l]
        except KeyError:
            raise DomainError(f"line {l} is not an affine line") from None

    def is_affine(self, P):
        return 0 <= P < self._plane.num_points and \
            bool(self._point_mask >> P & 1)

    def is_on_r_inf(self, P):
        return 0 <= P < self._plane.num_points and \
            bool(self._inf_mask >> P & 1)

    def __eq__(self, other):
        if not isinstance(other, AffineFrame):
            return NotImplemented
        return self._plane == other._plane and self._r_inf == other._r_inf

    def __hash__(self):
        return hash((self._plane, self._r_inf))

    def __repr__(self):
        return f"AG(2,{self.order}) = {self._plane!r} minus line {self._r_inf}"


def affine_frame(plane, r_inf):
    """AffineFrame of plane with r_inf as the line at infinity."""
    return AffineFrame(plane, r_inf)
