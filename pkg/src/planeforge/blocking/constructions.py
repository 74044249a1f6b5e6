# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Constructions
-------------
Explicit minimal blocking sets of PG(2,q) and AG(2,q).

Every construction returns a PointSet together with a trace object that
records the labelled points and lines used to build it. Free choices are
resolved by taking the admissible candidate with the smallest id; an
integer seed permutes the candidate order instead.

Triangle labels: for sides a, b, c the vertices are C = a∩b, B = a∩c
and A = b∩c.
"""
import itertools
import logging

import numpy as np

from planeforge.exceptions import DomainError, ConstructionExhaustedError
from planeforge.geometry.plane import ids_to_mask
from planeforge.geometry.point_set import PointSet
from planeforge.blocking.properties import tangent_lines

logger = logging.getLogger(__name__)


def _rng(seed):
    return None if seed is None else np.random.default_rng(seed)


def _ordered(candidates, rng):
    candidates = sorted(candidates)
    if rng is None:
        return candidates
    return [candidates[i] for i in rng.permutation(len(candidates))]


class TriangleTrace:
    """Sides a, b, c and vertices A = b∩c, B = a∩c, C = a∩b."""

    def __init__(self, a, b, c, A, B, C):
        self.a, self.b, self.c = a, b, c
        self.A, self.B, self.C = A, B, C

    @property
    def vertices(self):
        return self.A, self.B, self.C

    def to_dict(self):
        return {"a": self.a, "b": self.b, "c": self.c,
                "A": self.A, "B": self.B, "C": self.C}

    def __repr__(self):
        return f"TriangleTrace({self.to_dict()})"


class KConstructionTrace:
    """Labelled points of a k-construction.

    Attributes
    ----------
    triangle : TriangleTrace
    ell : int
        Line through A carrying the points D_i.
    a_prime : int
        A' = ell ∩ a.
    d_points, b_points, c_points : list of int
        D_i, B_i = BD_i ∩ b and C_i = CD_i ∩ c for i = 1..n.
    """

    def __init__(self, triangle, ell, a_prime, d_points, b_points, c_points):
        self.triangle = triangle
        self.ell = ell
        self.a_prime = a_prime
        self.d_points = list(d_points)
        self.b_points = list(b_points)
        self.c_points = list(c_points)

    @property
    def n(self):
        return len(self.d_points)

    def to_dict(self):
        trace = self.triangle.to_dict()
        trace["l"] = self.ell
        trace["A'"] = self.a_prime
        for label, points in (("D", self.d_points), ("B", self.b_points),
                              ("C", self.c_points)):
            for i, P in enumerate(points, start=1):
                trace[f"{label}{i}"] = P
        trace["n"] = self.n
        return trace

    def __repr__(self):
        return f"KConstructionTrace({self.to_dict()})"


class AffineTrace:
    """Trace of an affine construction: the projective trace it comes from,
    the line at infinity and the direction P_dir of the transversal c."""

    def __init__(self, base, r_inf, direction):
        self.base = base
        self.r_inf = r_inf
        self.direction = direction

    def to_dict(self):
        trace = self.base.to_dict()
        trace["r_inf"] = self.r_inf
        trace["P_dir"] = self.direction
        return trace

    def __repr__(self):
        return f"AffineTrace({self.to_dict()})"


class SemiovalTrace:
    """Line a, the two omitted points B, C of a and the split Y0 of GF(q)*."""

    def __init__(self, a, B, C, y0):
        self.a, self.B, self.C = a, B, C
        self.y0 = sorted(y0)

    def to_dict(self):
        return {"a": self.a, "B": self.B, "C": self.C, "Y0": self.y0}

    def __repr__(self):
        return f"SemiovalTrace({self.to_dict()})"


def _triangle_trace(plane, a, b, c):
    if len({a, b, c}) < 3:
        raise DomainError(f"triangle sides must be distinct, got "
                          f"{(a, b, c)}")
    for l in (a, b, c):
        plane.check_line(l)
    if plane.concurrent(a, b, c):
        raise DomainError(f"lines {(a, b, c)} are concurrent")
    return TriangleTrace(a, b, c,
                         A=plane.meet(b, c), B=plane.meet(a, c),
                         C=plane.meet(a, b))


def _triangle_mask(plane, trace):
    sides = plane.line_mask(trace.a) | plane.line_mask(trace.b) | \
        plane.line_mask(trace.c)
    return sides & ~ids_to_mask(trace.vertices)


def vertexless_triangle(plane, a, b, c):
    """Points on exactly one of three non-concurrent lines.

    Parameters
    ----------
    plane : Plane
    a, b, c : int
        Line ids.

    Returns
    -------
    points : PointSet
        (a ∪ b ∪ c) minus the vertices, 3q - 3 points.
    trace : TriangleTrace

    Raises
    ------
    DomainError
        If the lines repeat or are concurrent.
    """
    trace = _triangle_trace(plane, a, b, c)
    return PointSet(plane, _triangle_mask(plane, trace)), trace


def _pick_triangle(plane, rng):
    lines = _ordered(plane.line_ids, rng)
    a, b = lines[0], lines[1]
    C = plane.meet(a, b)
    c = next(l for l in lines[2:] if not plane.is_on(C, l))
    return a, b, c


def pick_triangle(plane, seed=None):
    """Three non-concurrent lines, smallest ids first unless seeded."""
    return _pick_triangle(plane, _rng(seed))


def vertexless_triangles(plane):
    """Every vertexless triangle of the plane, one PointSet per triangle."""
    triangles = []
    for a, b, c in itertools.combinations(plane.line_ids, 3):
        if not plane.concurrent(a, b, c):
            triangles.append(vertexless_triangle(plane, a, b, c)[0])
    return triangles


def _satisfies_closure(plane, mask, vertices):
    # For every labelling of the triangle P0 P1 P2: Q0 on P1P2 and Q1 on
    # P2P0 in the set force Q0Q1 ∩ P0P1 into the set.
    for P0, P1, P2 in itertools.permutations(vertices):
        s0 = plane.line_through(P1, P2)
        s1 = plane.line_through(P2, P0)
        s2 = plane.line_through(P0, P1)
        for Q0 in plane.points_on(s0):
            if not mask >> Q0 & 1:
                continue
            for Q1 in plane.points_on(s1):
                if Q1 == Q0 or not mask >> Q1 & 1:
                    continue
                joining = plane.line_through(Q0, Q1)
                if joining == s2:
                    continue
                if not mask >> plane.meet(joining, s2) & 1:
                    return False
    return True


def projective_triangles_side3(plane):
    """Every projective triangle of side 3 in PG(2,3).

    A projective triangle of side 3 is made of the vertices of a triangle
    plus one further point on each side, closed under: Q0 on P1P2 and Q1
    on P2P0 imply Q0Q1 ∩ P0P1 is in the set.

    Returns
    -------
    list of PointSet
        Distinct sets sorted by their ids.

    Raises
    ------
    DomainError
        If q != 3.
    """
    if plane.order != 3:
        raise DomainError(f"projective triangles of side 3 are built in "
                          f"PG(2,3), got q={plane.order}")
    found = set()
    for vertices in itertools.combinations(range(plane.num_points), 3):
        if plane.collinear(*vertices):
            continue
        P0, P1, P2 = vertices
        interiors = []
        for X, Y in ((P1, P2), (P2, P0), (P0, P1)):
            side = plane.points_on(plane.line_through(X, Y))
            interiors.append([Q for Q in side if Q not in (X, Y)])
        for chosen in itertools.product(*interiors):
            mask = ids_to_mask(vertices + chosen)
            if _satisfies_closure(plane, mask, vertices):
                found.add(mask)
    return [PointSet(plane, mask)
            for mask in sorted(found, key=lambda m: PointSet(plane, m).ids())]


def _project(plane, triangle, D):
    B_i = plane.meet(plane.line_through(triangle.B, D), triangle.b)
    C_i = plane.meet(plane.line_through(triangle.C, D), triangle.c)
    return B_i, C_i


def _k_construction_on_line(plane, triangle, ell, n, rng, avoid):
    q = plane.order
    a_prime = plane.meet(ell, triangle.a)
    sides = plane.line_mask(triangle.a) | plane.line_mask(triangle.b) | \
        plane.line_mask(triangle.c)
    blocked = sides | avoid
    candidates = _ordered([P for P in plane.points_on(ell)
                           if not blocked >> P & 1], rng)
    if len(candidates) < n:
        return None

    d_points = []
    if q % 2:
        # D2 is forced by D1: C2 = A'B1 ∩ c and D2 = C2C ∩ ell
        for D1 in candidates:
            B1, _ = _project(plane, triangle, D1)
            C2 = plane.meet(plane.line_through(a_prime, B1), triangle.c)
            D2 = plane.meet(plane.line_through(C2, triangle.C), ell)
            if D2 != D1 and D2 in candidates:
                d_points = [D1, D2]
                break
        else:
            return None
    rest = [D for D in candidates if D not in d_points]
    d_points += rest[:n - len(d_points)]
    if len(d_points) < n:
        return None

    projections = [_project(plane, triangle, D) for D in d_points]
    b_points = [B_i for B_i, _ in projections]
    c_points = [C_i for _, C_i in projections]
    return KConstructionTrace(triangle, ell, a_prime, d_points, b_points,
                              c_points)


def _k_construction_mask(plane, trace):
    mask = _triangle_mask(plane, trace.triangle) | ids_to_mask(trace.d_points)
    return mask & ~ids_to_mask(trace.b_points + trace.c_points)


def k_construction(plane, n, seed=None, triangle=None, avoid=0):
    """Minimal blocking set of size 3q - 3 - n from a vertexless triangle.

    A line ell through A other than b and c carries the points D_1..D_n,
    none of them on a side. With B_i = BD_i ∩ b and C_i = CD_i ∩ c the
    result is the triangle plus the D_i minus every B_i and C_i. For odd
    q the second point is D_2 = (A'B_1 ∩ c)C ∩ ell where A' = ell ∩ a;
    for even q every D_i is free.

    Parameters
    ----------
    plane : Plane
        PG(2,q) with q >= 4.
    n : int
        Number of points D_i, 2 <= n <= q - 2.
    seed : int, opt
        Permutes the order in which free choices are tried.
    triangle : tuple of int, opt
        Sides (a, b, c). Picked with pick_triangle when omitted.
    avoid : int, opt
        Bitmask of points that may not be used as D_i.

    Returns
    -------
    points : PointSet
    trace : KConstructionTrace

    Raises
    ------
    DomainError
        If q < 4 or n is out of range.
    ConstructionExhaustedError
        If no admissible choice of ell and the D_i exists.
    """
    q = plane.order
    if q < 4:
        raise DomainError(f"k-constructions need q >= 4, got q={q}")
    if not 2 <= n <= q - 2:
        raise DomainError(f"n must lie in [2, {q - 2}] for q={q}, got {n}")
    rng = _rng(seed)
    if triangle is None:
        triangle = _pick_triangle(plane, rng)
    tri = _triangle_trace(plane, *triangle)

    for ell in _ordered(set(plane.lines_through(tri.A)) - {tri.b, tri.c},
                        rng):
        trace = _k_construction_on_line(plane, tri, ell, n, rng, avoid)
        if trace is not None:
            break
    else:
        raise ConstructionExhaustedError(
            f"no admissible line and points D_i for n={n} in PG(2,{q})")

    points = PointSet(plane, _k_construction_mask(plane, trace))
    if points.size != 3 * q - 3 - n:
        raise ConstructionExhaustedError(
            f"k-construction produced {points.size} points, expected "
            f"{3 * q - 3 - n}")
    logger.debug("k-construction q=%d n=%d: %s", q, n, trace.to_dict())
    return points, trace


def k_construction_r_infinity_points(plane, trace):
    """Points of a k-construction where the r_inf-property is guaranteed.

    These are the points of the set lying on b or c, or on a but off every
    line B_iC_j.
    """
    tri = trace.triangle
    mask = _k_construction_mask(plane, trace)
    excluded = {plane.meet(plane.line_through(B_i, C_j), tri.a)
                for B_i in trace.b_points for C_j in trace.c_points}
    allowed = (plane.line_mask(tri.a) & ~ids_to_mask(excluded)) | \
        plane.line_mask(tri.b) | plane.line_mask(tri.c)
    return PointSet(plane, mask & allowed).ids()


def _affine_triangle(frame):
    # c is the smallest affine line; a and b are parallel with their
    # common point C on r_inf.
    c = frame.line_ids[0]
    direction = frame.direction_of(c)
    E = min(P for P in frame.infinite_points if P != direction)
    a, b = sorted(frame.parallel_class(E))[:2]
    return (a, b, c), direction


def affine_3q4(frame):
    """Minimal affine blocking set of size 3q - 4.

    Two parallel lines a, b and a transversal c, minus A = b∩c and
    B = a∩c. It has the strong Pi-property with respect to the direction
    of c.

    Returns
    -------
    points : PointSet
    trace : AffineTrace

    Raises
    ------
    DomainError
        If q < 3.
    """
    q = frame.order
    if q < 3:
        raise DomainError(f"affine_3q4 needs q >= 3, got q={q}")
    plane = frame.plane
    (a, b, c), direction = _affine_triangle(frame)
    triangle, trace = vertexless_triangle(plane, a, b, c)
    return triangle.remove(direction), AffineTrace(trace, frame.r_inf,
                                                   direction)


def affine_3q6(frame):
    """Minimal affine blocking set of size 3q - 6.

    The affine part of a k-construction with n = 2 on the triangle of
    affine_3q4, with D_1 and D_2 affine. It has the Pi-property but not
    the strong Pi-property with respect to the direction of c.

    Raises
    ------
    DomainError
        If q < 5.
    """
    q = frame.order
    if q < 5:
        raise DomainError(f"affine_3q6 needs q >= 5, got q={q}")
    plane = frame.plane
    triangle, direction = _affine_triangle(frame)
    points, trace = k_construction(plane, 2, triangle=triangle,
                                   avoid=frame.infinite_mask)
    return points.remove(direction), AffineTrace(trace, frame.r_inf,
                                                 direction)


def subplane_closure(plane, seeds):
    """Close a point set under joins and meets.

    Starting from the quadrilateral (1,0,0), (0,1,0), (0,0,1), (1,1,1)
    this yields the subplane over the prime field, a Baer subplane when
    q = p².
    """
    points = set(seeds)
    while True:
        lines = {plane.line_through(P, Q)
                 for P, Q in itertools.combinations(sorted(points), 2)}
        new = {plane.meet(l, m)
               for l, m in itertools.combinations(sorted(lines), 2)}
        if new <= points:
            return PointSet.from_ids(plane, points)
        points |= new


def baer_subplane(plane):
    """Baer subplane PG(2,p) of PG(2,p²), with q + sqrt(q) + 1 points.

    Raises
    ------
    DomainError
        If q is not the square of a prime.
    """
    field = plane.field
    if field.e != 2:
        raise DomainError(f"a Baer subplane over the prime field needs "
                          f"q = p^2, got q={field.q}")
    quadrilateral = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    return subplane_closure(plane, [plane.point_id(t) for t in quadrilateral])


def baer_patch_q4(plane):
    """Minimal blocking set of size 8 in PG(2,4) from a Baer subplane.

    R and T are the two smallest points of the Baer subplane, t is the
    smaller tangent at T and r_1, r_2 are the tangents at R. The set is
    the subplane minus R plus T_i = t ∩ r_i.

    Returns
    -------
    points : PointSet
    T : int
        Point with the r_inf-property.
    tangent : int
        The unique tangent at T, the other tangent of the subplane at T.

    Raises
    ------
    DomainError
        If q != 4.
    """
    if plane.order != 4:
        raise DomainError(f"baer_patch_q4 needs q = 4, got q={plane.order}")
    baer = baer_subplane(plane)
    R, T = baer.ids()[:2]
    t, t_other = sorted(tangent_lines(plane, baer, T))
    r_1, r_2 = sorted(tangent_lines(plane, baer, R))
    T_1, T_2 = plane.meet(t, r_1), plane.meet(t, r_2)
    points = baer.remove(R).add(T_1).add(T_2)
    logger.debug("Baer patch: R=%d T=%d t=%d T1=%d T2=%d", R, T, t, T_1, T_2)
    return points, T, t_other


def semioval_3q4(plane):
    """Blocking semioval of size 3q - 4 for q >= 5.

    With a the line z = 0, B = (1,0,0) and C = (0,1,0), the set is
    (a minus B, C) plus the affine points (x, 0) for x not in {0, 1},
    (0, y) for y in Y0 and (1, y) for y in Y1, where Y0 and Y1 split
    GF(q)*, Y0 = -Y0 and both have at least two elements.

    Returns
    -------
    points : PointSet
    trace : SemiovalTrace

    Raises
    ------
    DomainError
        If q < 5.
    """
    q = plane.order
    if q < 5:
        raise DomainError(f"semioval_3q4 needs q >= 5, got q={q}")
    field = plane.field
    if field.p == 2:
        y0 = {1, 2}
    else:
        y0 = {1, int(field.neg_idx(1))}
    y1 = set(range(1, q)) - y0
    triples = [(1, m, 0) for m in range(1, q)]
    triples += [(x, 0, 1) for x in range(2, q)]
    triples += [(0, y, 1) for y in sorted(y0)]
    triples += [(1, y, 1) for y in sorted(y1)]
    points = PointSet.from_coords(plane, triples)
    trace = SemiovalTrace(plane.line_id((0, 0, 1)),
                          plane.point_id((1, 0, 0)),
                          plane.point_id((0, 1, 0)), y0)
    return points, trace
