# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Alpha map
---------
Bijection between minimal blocking sets of PG(2,q) with the
r_inf-property at P (unique tangent r_inf) and minimal blocking sets of
AG(2,q) = PG(2,q) minus r_inf with the Pi-property with respect to the
direction P. Forward it removes P, backwards it adds P back.
"""
import logging

from planeforge.exceptions import DomainError
from planeforge.geometry.affine import affine_frame
from planeforge.blocking.properties import (is_blocking_projective,
                                            is_blocking_affine, is_minimal,
                                            has_r_infinity_property,
                                            has_pi_property)

logger = logging.getLogger(__name__)


def alpha(plane, S, P):
    """Affine image of a projective blocking set at a point.

    Parameters
    ----------
    plane : Plane
    S : PointSet
        Minimal blocking set with the r_inf-property at P.
    P : int
        Point of S.

    Returns
    -------
    frame : AffineFrame
        AG(2,q) with r_inf the unique tangent to S at P.
    image : PointSet
        S minus P.

    Raises
    ------
    DomainError
        Naming the precondition that fails.
    """
    if not S.contains(P):
        raise DomainError(f"precondition failed: point {P} is not in the set")
    if not is_blocking_projective(plane, S):
        raise DomainError("precondition failed: blocking (the set is not a "
                          "projective blocking set)")
    if not is_minimal(plane, S):
        raise DomainError("precondition failed: minimal")
    tangent = has_r_infinity_property(plane, S, P)
    if tangent is None:
        raise DomainError(f"precondition failed: r_inf-property at point {P}")
    frame = affine_frame(plane, tangent)
    logger.debug("alpha at P=%d with r_inf=%d", P, tangent)
    return frame, S.remove(P)


def alpha_inverse(frame, S, P_dir):
    """Projective preimage S ∪ {P_dir} of an affine blocking set.

    Raises
    ------
    DomainError
        If P_dir is not on r_inf or S is not a minimal affine blocking set
        with the Pi-property with respect to P_dir.
    """
    if not frame.is_on_r_inf(P_dir):
        raise DomainError(f"precondition failed: point {P_dir} is not on "
                          f"r_inf (line {frame.r_inf})")
    if not is_blocking_affine(frame, S):
        raise DomainError("precondition failed: blocking (the set is not an "
                          "affine blocking set)")
    if not is_minimal(frame, S):
        raise DomainError("precondition failed: minimal")
    if not has_pi_property(frame, S, P_dir):
        raise DomainError(f"precondition failed: Pi-property with respect "
                          f"to direction {P_dir}")
    return S.add(P_dir)
