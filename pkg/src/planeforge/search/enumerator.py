# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Enumeration of blocking sets
----------------------------
Two engines answer a SearchQuery on a Plane or an AffineFrame:

* exhaustive: every subset of the universe (compressed to uint64 masks)
  is evaluated in numpy batches.
* pruned: a covering depth-first search. Each node branches on the
  uncovered line with the fewest available points; earlier siblings are
  excluded from later branches so every set is generated once. A node is
  cut when some uncovered line has no available point left or when the
  pencil bound (uncovered lines through a point that can no longer be
  chosen each need a distinct further point) exceeds the size range.
  With the ``minimal`` filter every chosen point must keep a private
  line, so the leaves are exactly the minimal transversals. The
  ``semioval`` filter is applied to every leaf before it is emitted.

The pruned search is split on its first branching into independent
subtrees, run serially or on a process pool. Results are merged in
canonical order so the certificate does not depend on the worker count.
Every match is re-checked by planeforge.blocking.properties before it
is emitted.
"""
import concurrent.futures
import itertools
import logging
import os
import time

import numpy as np
import pandas as pd
from tqdm import tqdm

from planeforge.constants import (DEFAULT_NODE_BUDGET, BUDGET_ENV_VAR,
                                  EXHAUSTIVE_CHUNK, EXHAUSTIVE_MAX_POINTS)
from planeforge.exceptions import (BudgetExceededError, DomainError,
                                   UsageError, VerificationError)
from planeforge.field.gf import field_new
from planeforge.geometry.plane import build_plane, mask_to_ids, ids_to_mask
from planeforge.geometry.affine import affine_frame
from planeforge.geometry.point_set import PointSet
from planeforge.blocking import properties
from planeforge.search.query import SearchQuery, Certificate

logger = logging.getLogger(__name__)

# Filters decided by the engines themselves; a disagreement with the
# checkers is a bug, not a rejection.
STRUCTURAL = ("blocking", "minimal", "semioval")


def default_budget():
    """Node budget from PLANEFORGE_BUDGET, or DEFAULT_NODE_BUDGET."""
    value = os.environ.get(BUDGET_ENV_VAR)
    if value is None or not value.strip():
        return DEFAULT_NODE_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV_VAR} must be an integer, "
                         f"got {value!r}") from None
    if budget < 1:
        raise UsageError(f"{BUDGET_ENV_VAR} must be positive, got {budget}")
    return budget


def _passes(structure, query, S, name):
    if name == "blocking":
        return properties.is_blocking(structure, S)
    if name == "minimal":
        return properties.is_minimal(structure, S)
    if name == "semioval":
        return properties.is_semioval(structure, S)
    if name == "r_inf_any":
        return bool(properties.r_infinity_points(structure, S))
    if name == "r_inf_at":
        if not S.contains(query.point):
            return False
        return properties.has_r_infinity_property(structure, S,
                                                  query.point) is not None
    if name == "pi":
        return properties.has_pi_property(structure, S, query.direction)
    if name == "pi_strong":
        return properties.has_pi_strong_property(structure, S,
                                                 query.direction)
    raise UsageError(f"unknown filter {name!r}")


def _accept(structure, query, mask):
    """Run every filter on a candidate the engine believes structural.

    Returns
    -------
    bool
        False when a non structural filter rejects the set.

    Raises
    ------
    VerificationError
        If the checkers disagree with the engine on a structural filter.
    """
    S = PointSet(structure.plane, mask)
    for name in query.filters:
        if _passes(structure, query, S, name):
            continue
        if name in STRUCTURAL:
            raise VerificationError(f"search emitted {S.ids()} but the "
                                    f"{name} check rejects it")
        return False
    return True


class _LimitReached(Exception):
    pass


class _CoverSearch:
    """Covering DFS over the lines of a plane or frame.

    Point sets are int bitmasks over point ids; sets of lines are int
    bitmasks over positions in ``structure.line_ids``.
    """

    def __init__(self, structure, query, budget, limit=None):
        self.structure = structure
        self.query = query
        self.lo, self.hi = query.sizes
        self.minimal = "minimal" in query.filters
        self.semioval = "semioval" in query.filters
        self.projective = structure.is_projective
        self.budget = budget
        self.limit = limit
        self.universe = structure.point_mask
        self.line_masks = [structure.line_mask(l) for l in structure.line_ids]
        self.all_lines = (1 << len(self.line_masks)) - 1
        position = {l: i for i, l in enumerate(structure.line_ids)}
        plane = structure.plane
        self.all_points = plane.point_mask
        # pencil[P]: the structure's lines through P, for every point of
        # the plane (points of r_inf see their parallel class)
        self.pencil = [0] * plane.num_points
        for P in range(plane.num_points):
            for l in plane.lines_through(P):
                if l in position:
                    self.pencil[P] |= 1 << position[l]
        self.nodes = 0
        self.matches = []
        self.truncated = False

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(f"pruned search visited more than "
                                      f"{self.budget} nodes")

    def _contains_line(self, mask):
        return any(m & ~mask == 0 for m in self.line_masks)

    def _is_semioval(self, mask):
        """One tangent through every point of mask."""
        for P in mask_to_ids(mask):
            tangents = 0
            rest = self.pencil[P]
            while rest:
                low = rest & -rest
                rest ^= low
                line = self.line_masks[low.bit_length() - 1]
                tangents += (line & mask).bit_count() == 1
            if tangents != 1:
                return False
        return True

    def _emit(self, mask):
        self._tick()
        if self.semioval and not self._is_semioval(mask):
            return
        if not _accept(self.structure, self.query, mask):
            return
        self.matches.append(mask_to_ids(mask))
        if self.limit is not None and len(self.matches) >= self.limit:
            self.truncated = True
            raise _LimitReached

    def _lower_bound(self, available, uncovered):
        bound = 1
        for P in mask_to_ids(self.all_points & ~available):
            bound = max(bound, (self.pencil[P] & uncovered).bit_count())
        return bound

    def _select_line(self, available, uncovered):
        """Candidates of the uncovered line with fewest of them, or None."""
        best, best_count = 0, None
        rest = uncovered
        while rest:
            low = rest & -rest
            rest ^= low
            candidates = self.line_masks[low.bit_length() - 1] & available
            count = candidates.bit_count()
            if count == 0:
                return None
            if best_count is None or count < best_count:
                best, best_count = candidates, count
        return best

    def branches(self, chosen, excluded, uncovered):
        """Branch points of a node as (point, excluded before it) pairs."""
        size = chosen.bit_count()
        if size >= self.hi:
            return []
        available = self.universe & ~chosen & ~excluded
        candidates = self._select_line(available, uncovered)
        if candidates is None:
            return []
        if size + self._lower_bound(available, uncovered) > self.hi:
            return []
        branches = []
        for v in mask_to_ids(candidates):
            branches.append((v, excluded))
            excluded |= 1 << v
        return branches

    def descend(self, chosen, excluded, uncovered, private, v):
        bit = 1 << v
        pencil = self.pencil[v]
        if self.minimal:
            hit_before = pencil & ~uncovered
            private = dict(private)
            for u, lines in list(private.items()):
                if lines & hit_before:
                    lines &= ~hit_before
                    if not lines:
                        return
                    private[u] = lines
            own = pencil & uncovered
            if not own:
                return
            private[v] = own
        elif self.projective:
            grown = chosen | bit
            rest = pencil
            while rest:
                low = rest & -rest
                rest ^= low
                if self.line_masks[low.bit_length() - 1] & ~grown == 0:
                    return
        self.node(chosen | bit, excluded, uncovered & ~pencil, private)

    def node(self, chosen, excluded, uncovered, private):
        self._tick()
        if not uncovered:
            self._leaf(chosen, excluded)
            return
        for v, before in self.branches(chosen, excluded, uncovered):
            self.descend(chosen, before, uncovered, private, v)

    def _leaf(self, chosen, excluded):
        size = chosen.bit_count()
        if self.minimal:
            # the lines themselves are minimal transversals
            if size >= self.lo and not (self.projective and
                                        chosen in self.line_masks):
                self._emit(chosen)
            return
        extra = mask_to_ids(self.universe & ~chosen & ~excluded)
        for r in range(max(0, self.lo - size), self.hi - size + 1):
            for combo in itertools.combinations(extra, r):
                mask = chosen | ids_to_mask(combo)
                if self.projective and r and self._contains_line(mask):
                    continue
                self._emit(mask)

    def run_branch(self, v, excluded):
        """Search the subtree where v is the first chosen point."""
        try:
            self.descend(0, excluded, self.all_lines, {}, v)
        except _LimitReached:
            pass


def _structure_key(structure):
    field = structure.field
    r_inf = None if structure.is_projective else structure.r_inf
    return field.p, field.e, r_inf


def _structure_from_key(key):
    p, e, r_inf = key
    plane = build_plane(field_new(p, e))
    if r_inf is None:
        return plane
    return affine_frame(plane, r_inf)


def _run_subtree(task):
    """Worker entry point; rebuilds the structure from cached factories."""
    key, query, v, excluded, budget, limit = task
    structure = _structure_from_key(key)
    search = _CoverSearch(structure, SearchQuery.from_dict(query), budget,
                          limit)
    search.run_branch(v, excluded)
    return search.matches, search.nodes, search.truncated


def _pruned(structure, query, budget, jobs, progress):
    root = _CoverSearch(structure, query, budget)
    root._tick()
    branches = root.branches(0, 0, root.all_lines)
    logger.info("Pruned search split into %d subtrees", len(branches))
    key = _structure_key(structure)
    tasks = [(key, query.to_dict(), v, excluded, budget, query.limit)
             for v, excluded in branches]
    matches, nodes, truncated = [], root.nodes, False
    if jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(tqdm(ex.map(_run_subtree, tasks),
                                total=len(tasks), disable=not progress))
    else:
        results = []
        for v, excluded in tqdm(branches, disable=not progress):
            search = _CoverSearch(structure, query, budget, query.limit)
            search.run_branch(v, excluded)
            results.append((search.matches, search.nodes, search.truncated))
            if nodes + sum(r[1] for r in results) > budget:
                break
    for found, visited, cut in results:
        matches.extend(found)
        nodes += visited
        truncated |= cut
    if nodes > budget:
        raise BudgetExceededError(f"pruned search visited {nodes} nodes, "
                                  f"more than the budget {budget}")
    return matches, nodes, truncated


def _exhaustive(structure, query, budget, progress):
    universe = mask_to_ids(structure.point_mask)
    n = len(universe)
    total = 1 << n
    if n > EXHAUSTIVE_MAX_POINTS or total > budget:
        logger.warning("Exhaustive space 2^%d exceeds the budget %d", n,
                       budget)
        raise BudgetExceededError(f"exhaustive search over {n} points needs "
                                  f"2^{n} candidates, more than the budget "
                                  f"{budget}; use pruned mode")
    bit_of = {P: i for i, P in enumerate(universe)}
    lines = np.array([ids_to_mask(bit_of[P]
                                  for P in mask_to_ids(structure.line_mask(l)))
                      for l in structure.line_ids], dtype=np.uint64)
    lo, hi = query.sizes
    filters = query.filters
    chunks = range(0, total, EXHAUSTIVE_CHUNK)
    logger.info("Exhaustive search over %d candidates in %d chunks", total,
                len(chunks))
    matches, truncated = [], False
    for start in tqdm(chunks, disable=not progress):
        masks = np.arange(start, min(start + EXHAUSTIVE_CHUNK, total),
                          dtype=np.uint64)
        sizes = np.bitwise_count(masks)
        keep = (sizes >= lo) & (sizes <= hi)
        masks, sizes = masks[keep], sizes[keep]
        if not len(masks):
            continue
        inter = masks[:, None] & lines[None, :]
        counts = np.bitwise_count(inter)
        ok = np.ones(len(masks), dtype=bool)
        if "blocking" in filters:
            ok &= (counts > 0).all(axis=1)
            if structure.is_projective:
                ok &= (inter != lines[None, :]).all(axis=1)
        if "minimal" in filters or "semioval" in filters:
            tangent = counts == 1
            covered = np.bitwise_or.reduce(
                np.where(tangent, inter, np.uint64(0)), axis=1)
            ok &= covered == masks
            if "semioval" in filters:
                ok &= tangent.sum(axis=1) == sizes
        for compressed in masks[ok]:
            mask = ids_to_mask(universe[i] for i in mask_to_ids(int(compressed)))
            if not _accept(structure, query, mask):
                continue
            matches.append(mask_to_ids(mask))
            if query.limit is not None and len(matches) >= query.limit:
                truncated = True
                break
        if truncated:
            break
    return matches, total, truncated


def enumerate_sets(structure, query, budget=None, jobs=1, progress=False):
    """Enumerate the point sets of a structure that satisfy a query.

    Parameters
    ----------
    structure : Plane or AffineFrame
    query : SearchQuery
    budget : int, opt
        Node budget. Defaults to default_budget().
    jobs : int, opt
        Worker processes for the pruned search.
    progress : bool, opt
        Show a progress bar over chunks or subtrees.

    Returns
    -------
    Certificate
        Complete unless the query limit was hit.

    Raises
    ------
    QueryError
        If the query does not fit the structure.
    BudgetExceededError
        If the exhaustive space or the visited nodes exceed the budget.
    VerificationError
        If a match fails the independent checkers.
    """
    query.validate(structure)
    budget = default_budget() if budget is None else int(budget)
    if jobs < 1:
        raise UsageError(f"jobs must be positive, got {jobs}")
    logger.info("Search %s on %r", query.to_dict(), structure)
    t0 = time.perf_counter()
    if query.mode == "exhaustive":
        matches, nodes, truncated = _exhaustive(structure, query, budget,
                                                progress)
    else:
        matches, nodes, truncated = _pruned(structure, query, budget, jobs,
                                            progress)
    matches.sort(key=lambda m: (len(m), m))
    if query.limit is not None and len(matches) > query.limit:
        truncated = True
        del matches[query.limit:]
    certificate = Certificate(query, not truncated, matches,
                              elapsed_ms=(time.perf_counter() - t0) * 1e3,
                              nodes=nodes)
    logger.info("Search %s with %d matches after %d nodes",
                certificate.outcome, len(certificate.matches), nodes)
    return certificate


def verify_affine_bound(frame, budget=None, jobs=1):
    """Certify that AG(2,q) has no blocking set of fewer than 2q-1 points.

    Exhaustive for q <= 4, pruned search otherwise. The certificate is
    complete and has no matches when the bound holds.

    Raises
    ------
    DomainError
        If q < 3.
    """
    q = frame.order
    if q < 3:
        raise DomainError(f"the affine bound needs q >= 3, got q={q}")
    mode = "exhaustive" if q <= 4 else "pruned"
    query = SearchQuery((1, 2 * q - 2), ("blocking",), setting="affine",
                        r_inf=frame.r_inf, mode=mode)
    return enumerate_sets(frame, query, budget=budget, jobs=jobs)


def spectrum_report(plane, sizes, mode=None, budget=None, jobs=1):
    """Labeled counts of minimal blocking sets per size.

    Parameters
    ----------
    plane : Plane
    sizes : int or tuple of int
        Size or inclusive size range.
    mode : str, opt
        Search mode; exhaustive for q <= 4 and pruned above by default.

    Returns
    -------
    report : pandas.DataFrame
        Indexed by size ``k`` with columns ``minimal``, ``r_inf`` (sets
        with the r_inf-property at some point) and ``semioval``.
        ``report.attrs["complete"]`` tells whether the counts are exact.
    """
    if mode is None:
        mode = "exhaustive" if plane.order <= 4 else "pruned"
    query = SearchQuery(sizes, ("blocking", "minimal"), mode=mode)
    certificate = enumerate_sets(plane, query, budget=budget, jobs=jobs)
    rows = {k: {"minimal": n, "r_inf": 0, "semioval": 0}
            for k, n in certificate.counts.items()}
    for ids in certificate.matches:
        S = PointSet.from_ids(plane, ids)
        row = rows[len(ids)]
        row["r_inf"] += bool(properties.r_infinity_points(plane, S))
        row["semioval"] += properties.is_semioval(plane, S)
    report = pd.DataFrame([{"k": k, **row} for k, row in rows.items()],
                          columns=["k", "minimal", "r_inf", "semioval"])
    report.set_index("k", inplace=True)
    report.attrs["complete"] = certificate.complete
    return report
