# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Acceptance checks
-----------------
Named checks of the blocking set theory for one plane order, from the
field and incidence axioms up to the alpha bijection. Each check
records whether it passed and a short detail; the command line prints
the report and fails when any check fails.
"""
import logging
import time

import numpy as np

from planeforge.exceptions import (ConstructionExhaustedError, DomainError,
                                   VerificationError)
from planeforge.field.gf import field_from_order
from planeforge.geometry.plane import build_plane
from planeforge.geometry.affine import affine_frame
from planeforge.geometry.point_set import PointSet
from planeforge.blocking.properties import (
    is_blocking_projective, is_blocking_affine, is_minimal, is_semioval,
    has_r_infinity_property, r_infinity_points, has_pi_property,
    has_pi_strong_property)
from planeforge.blocking.constructions import (
    vertexless_triangle, vertexless_triangles, pick_triangle, k_construction,
    k_construction_r_infinity_points, affine_3q4, affine_3q6, baer_patch_q4,
    semioval_3q4)
from planeforge.blocking.alpha import alpha, alpha_inverse
from planeforge.search.query import SearchQuery
from planeforge.search.enumerator import enumerate_sets, verify_affine_bound

logger = logging.getLogger(__name__)


class CheckResult:
    """Outcome of one named check."""

    def __init__(self, name, passed, detail="", elapsed_ms=0.0):
        self.name = name
        self.passed = bool(passed)
        self.detail = detail
        self.elapsed_ms = elapsed_ms

    def to_dict(self, timing=False):
        result = {"name": self.name, "passed": self.passed,
                  "detail": self.detail}
        if timing:
            result["elapsed_ms"] = round(self.elapsed_ms, 3)
        return result

    def __repr__(self):
        status = "ok" if self.passed else "FAILED"
        return f"CheckResult({self.name}: {status})"


class VerificationReport:
    """Checks run for one order q, in execution order."""

    def __init__(self, q, checks):
        self.q = q
        self.checks = list(checks)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check.name for check in self.checks if not check.passed]

    def to_dict(self, timing=False):
        return {"q": self.q, "passed": self.passed,
                "checks": [c.to_dict(timing) for c in self.checks]}

    def __repr__(self):
        return (f"VerificationReport(q={self.q}, {len(self.checks)} checks, "
                f"failures={self.failures})")


def field_axioms(field):
    """Exhaustive commutative ring axioms plus inverses on the tables."""
    q = field.q
    A, M = field.add_table, field.mul_table
    index = np.arange(q)
    i, k = index[:, None, None], index[None, None, :]
    checks = [
        (A == A.T).all(), (M == M.T).all(),
        (A[A[:, :, None], k] == A[i, A[None, :, :]]).all(),
        (M[M[:, :, None], k] == M[i, M[None, :, :]]).all(),
        (M[i, A[None, :, :]] == A[M[:, :, None], M[:, None, :]]).all(),
        (A[0] == index).all(), (M[1] == index).all(),
        # additive inverses exist and every nonzero row of M is a bijection
        ((A == 0).sum(axis=1) == 1).all(),
        (np.sort(M[1:], axis=1) == index).all(),
        (M[index[1:], field.inv_table[1:]] == 1).all(),
    ]
    return all(bool(c) for c in checks)


def plane_axioms(plane):
    """Two points span one line, two lines meet in one point."""
    n = plane.num_points
    q = plane.order
    inc = plane.incidence.astype(np.int64)
    lines_per_pair = inc.T @ inc
    points_per_pair = inc @ inc.T
    off = ~np.eye(n, dtype=bool)
    return bool((inc.sum(axis=1) == q + 1).all() and
                (inc.sum(axis=0) == q + 1).all() and
                (lines_per_pair[off] == 1).all() and
                (points_per_pair[off] == 1).all())


def _alpha_round_trip(plane, S, P):
    frame, image = alpha(plane, S, P)
    if not (is_blocking_affine(frame, image) and is_minimal(frame, image)
            and has_pi_property(frame, image, P)):
        return False
    if is_semioval(plane, S) and not has_pi_strong_property(frame, image, P):
        return False
    return alpha_inverse(frame, image, P) == S


def _alpha_suite(plane, sets):
    """Round trip at the smallest r_inf point of each set that has one."""
    checked = 0
    for S in sets:
        points = r_infinity_points(plane, S)
        if not points:
            continue
        if not _alpha_round_trip(plane, S, min(points)):
            return False, f"round trip failed on {S.ids()}"
        checked += 1
    return True, f"{checked} sets"


def _minimal_sets(certificate, plane):
    return [PointSet.from_ids(plane, ids) for ids in certificate.matches]


def _pg3_checks(plane, budget, jobs):
    query = SearchQuery((1, 13), ("blocking", "minimal"), mode="exhaustive")
    certificate = enumerate_sets(plane, query, budget=budget, jobs=jobs)
    sets = _minimal_sets(certificate, plane)
    found = {S.mask for S in sets}
    triangles = {S.mask for S in vertexless_triangles(plane)}

    def classification():
        sizes = {S.size for S in sets}
        everywhere = all(len(r_infinity_points(plane, S)) == S.size
                         for S in sets)
        ok = certificate.complete and sizes == {6} and \
            found == triangles and everywhere
        return ok, f"{len(sets)} minimal blocking sets, sizes {sorted(sizes)}"

    return [("pg3_classification", classification),
            ("alpha_suite", lambda: _alpha_suite(plane, sets))]


def _pg4_checks(plane, budget, jobs):
    query = SearchQuery((1, 21), ("blocking", "minimal"), mode="exhaustive")
    certificate = enumerate_sets(plane, query, budget=budget, jobs=jobs)
    sets = _minimal_sets(certificate, plane)

    def spectrum():
        sizes = sorted({S.size for S in sets})
        return certificate.complete and sizes == [7, 8, 9], f"sizes {sizes}"

    def no_r_inf_at_7():
        count = sum(1 for S in sets
                    if S.size == 7 and r_infinity_points(plane, S))
        return count == 0, f"{count} sets of size 7 with the property"

    def baer_patch():
        S, T, tangent = baer_patch_q4(plane)
        ok = S.ids() in certificate.matches and \
            has_r_infinity_property(plane, S, T) == tangent
        return ok, f"size {S.size}, T={T}, tangent {tangent}"

    return [("pg4_spectrum", spectrum),
            ("pg4_no_r_inf_at_7", no_r_inf_at_7),
            ("pg4_baer_patch", baer_patch),
            ("alpha_suite", lambda: _alpha_suite(plane, sets))]


def _construction_checks(plane):
    q = plane.order

    def size_law():
        sizes = []
        for n in range(2, q - 1):
            S, _ = k_construction(plane, n)
            if S.size != 3 * q - 3 - n or not (
                    is_blocking_projective(plane, S) and
                    is_minimal(plane, S)):
                return False, f"n={n} gives {S.size} points"
            sizes.append(S.size)
        return True, f"sizes {sizes}"

    def dichotomy():
        smallest, _ = k_construction(plane, q - 2)
        if r_infinity_points(plane, smallest):
            return False, f"a set of size {smallest.size} has the property"
        S, trace = k_construction(plane, q - 3)
        points = k_construction_r_infinity_points(plane, trace)
        ok = bool(points) and not is_semioval(plane, S) and all(
            has_r_infinity_property(plane, S, P) is not None
            for P in points)
        return ok, f"size {smallest.size} none, size {S.size} at {points}"

    def coverage():
        witnesses = {}
        for n in range(2, q - 2):
            S, trace = k_construction(plane, n)
            witnesses[S.size] = (S, k_construction_r_infinity_points(plane,
                                                                     trace))
        S, _ = semioval_3q4(plane)
        witnesses[S.size] = (S, S.ids())
        S, _ = vertexless_triangle(plane, *pick_triangle(plane))
        witnesses[S.size] = (S, S.ids())
        for k in range(2 * q, 3 * q - 2):
            if k not in witnesses:
                return False, f"no construction of size {k}"
            S, points = witnesses[k]
            if not points or not is_blocking_projective(plane, S) or any(
                    has_r_infinity_property(plane, S, P) is None
                    for P in points):
                return False, f"size {k} fails"
        return True, f"sizes {2 * q}..{3 * q - 3}"

    def alpha_on_constructions():
        sets = [k_construction(plane, n)[0] for n in range(2, q - 2)]
        sets.append(semioval_3q4(plane)[0])
        sets.append(vertexless_triangle(plane, *pick_triangle(plane))[0])
        return _alpha_suite(plane, sets)

    return [("size_law", size_law), ("r_inf_dichotomy", dichotomy),
            ("r_inf_coverage", coverage),
            ("alpha_suite", alpha_on_constructions)]


def _affine_checks(plane, budget, jobs):
    q = plane.order
    frame = affine_frame(plane, 0)
    checks = []

    if q <= 5:
        def bound():
            certificate = verify_affine_bound(frame, budget=budget,
                                              jobs=jobs)
            ok = certificate.complete and not certificate.matches
            return ok, f"no blocking set of size <= {2 * q - 2}"
        checks.append(("affine_bound", bound))

    def attained():
        directions = frame.infinite_points
        l1 = frame.parallel_class(directions[0])[0]
        l2 = frame.parallel_class(directions[1])[0]
        S = PointSet(plane, frame.line_mask(l1) | frame.line_mask(l2))
        ok = S.size == 2 * q - 1 and is_blocking_affine(frame, S) and \
            is_minimal(frame, S)
        detail = f"two lines, {S.size} points"
        if q == 3:
            # 3q - 4 = 2q - 1 only here
            T, _ = affine_3q4(frame)
            ok = ok and T.size == 5 and is_blocking_affine(frame, T) and \
                is_minimal(frame, T)
            detail += f", affine_3q4 {T.size} points"
        return ok, detail
    checks.append(("affine_bound_attained", attained))

    def pi_examples():
        S, trace = affine_3q4(frame)
        ok = has_pi_strong_property(frame, S, trace.direction)
        detail = f"3q-4 strong={ok}"
        if q >= 5:
            S, trace = affine_3q6(frame)
            weak = has_pi_property(frame, S, trace.direction) and \
                not has_pi_strong_property(frame, S, trace.direction)
            ok = ok and weak
            detail += f", 3q-6 weak only={weak}"
        return ok, detail
    checks.append(("pi_examples", pi_examples))
    return checks


def _run(name, check):
    t0 = time.perf_counter()
    try:
        passed, detail = check()
    except (DomainError, ConstructionExhaustedError,
            VerificationError) as err:
        passed, detail = False, f"{type(err).__name__}: {err}"
    result = CheckResult(name, passed, detail,
                         (time.perf_counter() - t0) * 1e3)
    log = logger.info if result.passed else logger.error
    log("%s: %s (%s)", name, "ok" if result.passed else "FAILED", detail)
    return result


def verify_paper(q, budget=None, jobs=1):
    """Run every acceptance check that applies to the order q.

    Parameters
    ----------
    q : int
        Prime power, 3 <= q <= 32.
    budget : int, opt
        Node budget for the searches.
    jobs : int, opt
        Worker processes for pruned searches.

    Returns
    -------
    VerificationReport

    Raises
    ------
    DomainError
        If q < 3 or the plane is too large.
    BudgetExceededError
        If a search does not fit in the budget.
    """
    if q < 3:
        raise DomainError(f"blocking sets exist only for q > 2, got q={q}")
    field = field_from_order(q)
    plane = build_plane(field)
    checks = [("field_axioms", lambda: (field_axioms(field), repr(field))),
              ("plane_axioms",
               lambda: (plane_axioms(plane), f"{plane.num_points} points"))]
    if q == 3:
        checks += _pg3_checks(plane, budget, jobs)
    elif q == 4:
        checks += _pg4_checks(plane, budget, jobs)
    else:
        checks += _construction_checks(plane)
    checks += _affine_checks(plane, budget, jobs)
    logger.info("Running %d checks for q=%d", len(checks), q)
    return VerificationReport(q, [_run(name, check) for name, check in checks])
