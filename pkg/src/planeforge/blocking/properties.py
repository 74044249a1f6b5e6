# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Blocking set properties
-----------------------
Checkers for the properties of a point set S in a projective plane or in
an affine frame. Every function takes the structure first: a Plane for
the projective setting or an AffineFrame for AG(2,q).

A line l is a tangent to S at P when l meets S exactly in {P}, and a
secant when it meets S in two or more points.

Conventions for degenerate inputs: the empty set is not blocking and is
vacuously a semioval.
"""
import logging

import numpy as np

from planeforge.exceptions import DomainError, UsageError

logger = logging.getLogger(__name__)


def _check_set(structure, S):
    if S.plane != structure.plane:
        raise UsageError(f"point set of {S.plane!r} used with "
                         f"{structure.plane!r}")
    if not structure.is_projective and S.mask & ~structure.point_mask:
        raise DomainError(f"set meets r_inf (line {structure.r_inf}); "
                          f"affine sets must avoid it")


def _check_member(S, P):
    if not S.contains(P):
        raise DomainError(f"point {P} is not in the set")


def line_counts(structure, S):
    """Number of points of S on every line of the structure.

    Returns
    -------
    counts : dict
        Line id -> |l ∩ S|.
    """
    mask = S.mask
    return {l: (structure.line_mask(l) & mask).bit_count()
            for l in structure.line_ids}


def tangent_lines(structure, S, P):
    """Lines meeting S exactly in P.

    Raises
    ------
    DomainError
        If P is not in S.
    """
    _check_set(structure, S)
    _check_member(S, P)
    single = 1 << P
    return [l for l in structure.lines_through(P)
            if structure.line_mask(l) & S.mask == single]


def secant_lines(structure, S, P):
    """Lines through P meeting S in at least two points."""
    _check_set(structure, S)
    _check_member(S, P)
    return [l for l in structure.lines_through(P)
            if (structure.line_mask(l) & S.mask).bit_count() >= 2]


def is_blocking_projective(plane, S):
    """Every line meets S and no line is contained in S."""
    if not plane.is_projective:
        raise UsageError("is_blocking_projective needs a projective plane")
    _check_set(plane, S)
    mask = S.mask
    for l in plane.line_ids:
        members = plane.line_mask(l)
        inter = members & mask
        if not inter or inter == members:
            return False
    return True


def is_blocking_affine(frame, S):
    """Every affine line meets S. S may contain whole affine lines.

    Raises
    ------
    DomainError
        If S has points on r_inf.
    """
    if frame.is_projective:
        raise UsageError("is_blocking_affine needs an AffineFrame")
    _check_set(frame, S)
    mask = S.mask
    return all(frame.line_mask(l) & mask for l in frame.line_ids)


def is_blocking(structure, S):
    if structure.is_projective:
        return is_blocking_projective(structure, S)
    return is_blocking_affine(structure, S)


def _require_blocking(structure, S):
    if not is_blocking(structure, S):
        setting = "projective" if structure.is_projective else "affine"
        raise DomainError(f"precondition failed: the set is not a "
                          f"{setting} blocking set")


def is_minimal(structure, S):
    """A blocking set is minimal iff every point has a tangent.

    Raises
    ------
    DomainError
        If S is not a blocking set of the structure.
    """
    _require_blocking(structure, S)
    return all(tangent_lines(structure, S, P) for P in S.ids())


def is_semioval(structure, S):
    """Exactly one tangent at every point of S (true for the empty set)."""
    _check_set(structure, S)
    return all(len(tangent_lines(structure, S, P)) == 1 for P in S.ids())


def _require_projective(plane):
    if not plane.is_projective:
        raise UsageError("the r_inf-property is defined in the projective "
                         "plane")


def has_r_infinity_property(plane, S, P):
    """Unique tangent to the blocking set S through P, if any.

    Since S is blocking, the other q lines through P are then secants.

    Parameters
    ----------
    plane : Plane
    S : PointSet
        A projective blocking set.
    P : int
        A point of S.

    Returns
    -------
    int or None
        Id of the tangent line when it is unique.

    Raises
    ------
    DomainError
        If S is not blocking or P is not in S.
    """
    _require_projective(plane)
    _require_blocking(plane, S)
    _check_member(S, P)
    tangents = tangent_lines(plane, S, P)
    if len(tangents) == 1:
        return tangents[0]
    return None


def r_infinity_points(plane, S):
    """Map every point of S with the r_inf-property to its tangent."""
    _require_projective(plane)
    _require_blocking(plane, S)
    points = {}
    for P in S.ids():
        tangents = tangent_lines(plane, S, P)
        if len(tangents) == 1:
            points[P] = tangents[0]
    return points


def _pi_tangent_counts(frame, S, P_dir):
    if frame.is_projective:
        raise UsageError("the Pi-property is defined in an AffineFrame")
    parallel_class = frame.parallel_class(P_dir)
    _require_blocking(frame, S)
    mask = S.mask
    # (jj) no line of the class lies inside S
    for l in parallel_class:
        if frame.line_mask(l) & ~mask == 0:
            return None
    outside = set(frame.line_ids) - set(parallel_class)
    return [sum(1 for l in tangent_lines(frame, S, Q) if l in outside)
            for Q in S.ids()]


def has_pi_property(frame, S, P_dir):
    """Pi-property of an affine blocking set with respect to a direction.

    Every point of S has a tangent outside the parallel class of P_dir,
    and no line of that class is contained in S.

    Raises
    ------
    DomainError
        If P_dir is not on r_inf or S is not an affine blocking set.
    """
    counts = _pi_tangent_counts(frame, S, P_dir)
    return counts is not None and all(c >= 1 for c in counts)


def has_pi_strong_property(frame, S, P_dir):
    """Like has_pi_property but with exactly one tangent outside the class."""
    counts = _pi_tangent_counts(frame, S, P_dir)
    return counts is not None and all(c == 1 for c in counts)


class TangentReport:
    """Line intersection spectrum and per-point tangent/secant counts.

    Attributes
    ----------
    spectrum : ndarray, shape (q + 2,)
        spectrum[j] is the number of lines meeting the set in j points.
    tangents_per_point : dict
        Point id -> number of tangents through it.
    secants_per_point : dict
        Point id -> number of secants through it.
    """

    def __init__(self, order, spectrum, tangents_per_point,
                 secants_per_point):
        self._order = order
        self._spectrum = spectrum
        self._tangents = tangents_per_point
        self._secants = secants_per_point

    @property
    def order(self):
        return self._order

    @property
    def spectrum(self):
        return self._spectrum

    @property
    def tangents_per_point(self):
        return self._tangents

    @property
    def secants_per_point(self):
        return self._secants

    def x(self, j):
        return int(self._spectrum[j])

    @property
    def x_q_minus_1(self):
        return self.x(self._order - 1)

    def to_dict(self):
        return {
            "spectrum": [int(x) for x in self._spectrum],
            "tangents_per_point": {str(P): n
                                   for P, n in self._tangents.items()},
        }

    def __repr__(self):
        return (f"TangentReport(q={self._order}, "
                f"spectrum={self.to_dict()['spectrum']})")


def tangent_report(structure, S):
    """Spectrum x_0..x_{q+1} and per-point counts for S."""
    _check_set(structure, S)
    q = structure.order
    counts = line_counts(structure, S)
    spectrum = np.bincount(np.fromiter(counts.values(), dtype=np.int64),
                           minlength=q + 2)
    tangents = {}
    secants = {}
    for P in S.ids():
        through = [counts[l] for l in structure.lines_through(P)]
        tangents[P] = sum(1 for c in through if c == 1)
        secants[P] = sum(1 for c in through if c >= 2)
    return TangentReport(q, spectrum, tangents, secants)


def check_properties(structure, S, names, point=None, direction=None):
    """Evaluate named properties, as used by the command line and search.

    Names are ``blocking``, ``minimal``, ``semioval``, ``r_inf``
    (at ``point`` if given, else at some point), ``pi`` and
    ``pi_strong`` (with respect to ``direction``).

    Returns
    -------
    dict
        Name -> bool, except ``r_inf`` at a point which maps to the
        tangent id or None.
    """
    results = {}
    for name in names:
        if name == "blocking":
            results[name] = is_blocking(structure, S)
        elif name == "minimal":
            results[name] = is_minimal(structure, S)
        elif name == "semioval":
            results[name] = is_semioval(structure, S)
        elif name == "r_inf":
            if point is None:
                results[name] = bool(r_infinity_points(structure, S))
            else:
                results[name] = has_r_infinity_property(structure, S, point)
        elif name in ("pi", "pi_strong"):
            if direction is None:
                raise UsageError(f"property {name} needs a direction")
            check = has_pi_property if name == "pi" else \
                has_pi_strong_property
            results[name] = check(structure, S, direction)
        else:
            raise UsageError(f"unknown property {name!r}")
    logger.debug("Checked %s on %r: %s", names, S, results)
    return results
