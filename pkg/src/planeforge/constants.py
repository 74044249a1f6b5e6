# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Constant values
---------------
Caps and defaults shared by the field, plane and search layers.

"""

# FIELDS
# Largest field order accepted by field_new (desk scale)
MAX_FIELD_ORDER = 2 ** 16
# Full q x q addition/multiplication tables are only materialised up to
# this order; larger fields use log/antilog tables.
FULL_TABLE_MAX_ORDER = 256

# PLANES
# Incidence matrices are dense (q²+q+1)² arrays.
MAX_PLANE_ORDER = 32
# Joins and meets are stored in flat lookup tables up to this order and
# computed from coordinates above it.
PAIR_TABLE_MAX_ORDER = 16

# SEARCH
DEFAULT_NODE_BUDGET = 2 ** 32
BUDGET_ENV_VAR = "PLANEFORGE_BUDGET"
# Number of candidate subsets evaluated per numpy batch in exhaustive mode
EXHAUSTIVE_CHUNK = 2 ** 16
# Widest universe the vectorised evaluator handles (uint64 masks)
EXHAUSTIVE_MAX_POINTS = 62
