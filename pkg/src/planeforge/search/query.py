# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Search queries and certificates
-------------------------------
"""
import numbers

from planeforge.exceptions import QueryError

FILTERS = ("blocking", "minimal", "semioval", "r_inf_any", "r_inf_at", "pi",
           "pi_strong")
# Filters that are only defined for blocking sets
NEEDS_BLOCKING = ("minimal", "r_inf_any", "r_inf_at", "pi", "pi_strong")
PROJECTIVE_ONLY = ("r_inf_any", "r_inf_at")
AFFINE_ONLY = ("pi", "pi_strong")
MODES = ("exhaustive", "pruned")
SETTINGS = ("projective", "affine")


class SearchQuery:
    """What to enumerate.

    Parameters
    ----------
    sizes : int or tuple of int
        A single size k or an inclusive range (lo, hi).
    filters : iterable of str, opt
        Subset of FILTERS. Defaults to ("blocking",).
    setting : str, opt
        "projective" (default) or "affine".
    r_inf : int, opt
        Line at infinity, required for the affine setting.
    point : int, opt
        Point for the ``r_inf_at`` filter.
    direction : int, opt
        Point of r_inf for the ``pi`` and ``pi_strong`` filters.
    mode : str, opt
        "pruned" (default) covering search or "exhaustive" power-set scan.
    limit : int, opt
        Stop after this many matches.
    """

    def __init__(self, sizes, filters=("blocking",), setting="projective",
                 r_inf=None, point=None, direction=None, mode="pruned",
                 limit=None):
        if isinstance(sizes, numbers.Integral):
            sizes = (sizes, sizes)
        try:
            lo, hi = (int(k) for k in sizes)
        except (TypeError, ValueError):
            raise QueryError(f"sizes must be an integer or a (lo, hi) "
                             f"pair, got {sizes!r}") from None
        self.sizes = (lo, hi)
        # canonical order so that echoes are stable
        filters = set(filters)
        unknown = filters - set(FILTERS)
        if unknown:
            raise QueryError(f"unknown filters {sorted(unknown)}; "
                             f"choose from {', '.join(FILTERS)}")
        self.filters = tuple(f for f in FILTERS if f in filters)
        self.setting = setting
        self.r_inf = r_inf
        self.point = point
        self.direction = direction
        self.mode = mode
        self.limit = limit
        self._check()

    def _check(self):
        lo, hi = self.sizes
        if lo < 1 or hi < lo:
            raise QueryError(f"invalid size range {lo}..{hi}")
        if self.setting not in SETTINGS:
            raise QueryError(f"setting must be one of {SETTINGS}, "
                             f"got {self.setting!r}")
        if self.mode not in MODES:
            raise QueryError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.setting == "affine" and self.r_inf is None:
            raise QueryError("the affine setting needs r_inf")
        if self.setting == "projective" and self.r_inf is not None:
            raise QueryError("r_inf is only meaningful in the affine setting")
        for name in self.filters:
            if name in NEEDS_BLOCKING and "blocking" not in self.filters:
                raise QueryError(f"filter {name} needs the blocking filter")
            if name in PROJECTIVE_ONLY and self.setting != "projective":
                raise QueryError(f"filter {name} needs the projective "
                                 f"setting")
            if name in AFFINE_ONLY and self.setting != "affine":
                raise QueryError(f"filter {name} needs the affine setting")
        if "r_inf_at" in self.filters and self.point is None:
            raise QueryError("filter r_inf_at needs a point")
        if set(AFFINE_ONLY) & set(self.filters) and self.direction is None:
            raise QueryError("Pi filters need a direction")
        if self.mode == "pruned" and "blocking" not in self.filters:
            raise QueryError("pruned mode searches blocking sets; add the "
                             "blocking filter or use exhaustive mode")
        if self.limit is not None and int(self.limit) < 1:
            raise QueryError(f"limit must be positive, got {self.limit}")

    def validate(self, structure):
        """Check the query against the plane or frame it will run on."""
        projective = structure.is_projective
        if projective != (self.setting == "projective"):
            kind = "a projective plane" if projective else "an affine frame"
            raise QueryError(f"{self.setting} query run on {kind}")
        if not projective and structure.r_inf != self.r_inf:
            raise QueryError(f"query r_inf={self.r_inf} but the frame uses "
                             f"{structure.r_inf}")
        universe = structure.point_mask.bit_count()
        if self.sizes[1] > universe:
            raise QueryError(f"size {self.sizes[1]} exceeds the "
                             f"{universe} points available")
        plane = structure.plane
        if self.point is not None and not 0 <= self.point < plane.num_points:
            raise QueryError(f"point {self.point} is not a point id")
        if self.direction is not None and \
                not structure.is_projective and \
                not structure.is_on_r_inf(self.direction):
            raise QueryError(f"direction {self.direction} is not on r_inf")

    @property
    def size_range(self):
        return range(self.sizes[0], self.sizes[1] + 1)

    def to_dict(self):
        query = {"setting": self.setting,
                 "sizes": list(self.sizes),
                 "filters": list(self.filters),
                 "mode": self.mode}
        for key in ("r_inf", "point", "direction", "limit"):
            value = getattr(self, key)
            if value is not None:
                query[key] = value
        return query

    @classmethod
    def from_dict(cls, query):
        return cls(sizes=tuple(query["sizes"]),
                   filters=query.get("filters", ("blocking",)),
                   setting=query.get("setting", "projective"),
                   r_inf=query.get("r_inf"), point=query.get("point"),
                   direction=query.get("direction"),
                   mode=query.get("mode", "pruned"),
                   limit=query.get("limit"))

    def __eq__(self, other):
        if not isinstance(other, SearchQuery):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return f"SearchQuery({self.to_dict()})"


class Certificate:
    """Outcome of a search.

    Attributes
    ----------
    query : SearchQuery
    complete : bool
        True when the match list is exhaustive; False when the limit was
        hit.
    matches : list of list of int
        Sorted point ids of every match, ordered by size then ids.
    counts : dict
        Size -> number of matches, for every size of the query range.
    elapsed_ms : float
        Wall time. Not part of equality.
    nodes : int
        Candidates evaluated (exhaustive) or search nodes (pruned).
    """

    def __init__(self, query, complete, matches, elapsed_ms=0.0, nodes=0):
        self.query = query
        self.complete = complete
        self.matches = sorted((sorted(m) for m in matches),
                              key=lambda m: (len(m), m))
        self.counts = {k: 0 for k in query.size_range}
        for m in self.matches:
            self.counts[len(m)] += 1
        self.elapsed_ms = elapsed_ms
        self.nodes = nodes

    @property
    def outcome(self):
        return "exhausted" if self.complete else "limit-hit"

    def to_dict(self, timing=False):
        certificate = {
            "query": self.query.to_dict(),
            "complete": self.complete,
            "matches": self.matches,
            "counts": {str(k): n for k, n in self.counts.items()},
        }
        if timing:
            certificate["elapsed_ms"] = round(self.elapsed_ms, 3)
            certificate["nodes"] = self.nodes
        return certificate

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self):
        return (f"Certificate({self.outcome}, {len(self.matches)} matches, "
                f"counts={self.counts})")
