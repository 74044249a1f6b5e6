"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.
"""
from planeforge.blocking.properties import (
    tangent_lines, secant_lines, is_blocking_projective, is_blocking_affine,
    is_blocking, is_minimal, is_semioval, has_r_infinity_property,
    r_infinity_points, has_pi_property, has_pi_strong_property,
    TangentReport, tangent_report, check_properties)
from planeforge.blocking.constructions import (
    vertexless_triangle, vertexless_triangles, pick_triangle, k_construction,
    k_construction_r_infinity_points, affine_3q4, affine_3q6, baer_patch_q4,
    semioval_3q4, projective_triangles_side3)
from planeforge.blocking.alpha import alpha, alpha_inverse
