"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.
"""
from planeforge.field.gf import (FieldSpec, FieldElement, field_new,
                                 field_from_order, add, sub, mul, div, neg,
                                 inv)
