"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.
"""
from planeforge.search.query import SearchQuery, Certificate, FILTERS
from planeforge.search.enumerator import (enumerate_sets, verify_affine_bound,
                                          spectrum_report, default_budget)
