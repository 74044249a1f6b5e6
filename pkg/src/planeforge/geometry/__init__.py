"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.
"""
from planeforge.geometry.plane import (Plane, build_plane, line_through, meet,
                                       normalize, plane_dump)
from planeforge.geometry.affine import AffineFrame, affine_frame
from planeforge.geometry.point_set import PointSet
