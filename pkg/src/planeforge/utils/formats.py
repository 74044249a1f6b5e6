# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

File formats
------------
Point sets are stored as JSON objects::

    {"q": 5, "p": 5, "e": 1, "modulus": [],
     "points": [[0, 0, 1], [0, 1, 2], ...],
     "setting": {"r_inf": 0},
     "trace": {...}}

``points`` holds homogeneous triples of element indices in the plane's
canonical form (first nonzero entry 1), sorted by point id. ``setting``
is present for affine sets only and ``trace`` for constructions.

Every JSON document is written with sorted keys so that the same command
produces the same bytes.
"""
import json
import logging

import numpy as np

from planeforge.exceptions import DomainError
from planeforge.field.gf import field_new
from planeforge.geometry.plane import build_plane, normalize
from planeforge.geometry.affine import affine_frame
from planeforge.geometry.point_set import PointSet

logger = logging.getLogger(__name__)


def _builtin(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"{type(obj).__name__} is not JSON serializable")


def dump_json(obj):
    """Stable JSON text with a trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, default=_builtin) + "\n"


def point_set_to_dict(S, frame=None, trace=None):
    """PointSetFile document of S.

    Parameters
    ----------
    S : PointSet
    frame : AffineFrame, opt
        Recorded as the affine setting.
    trace : object with to_dict, or dict, opt
        Labelled points of the construction that produced S.
    """
    field = S.plane.field
    document = {"q": field.q, "p": field.p, "e": field.e,
                "modulus": list(field.modulus),
                "points": [list(t) for t in S.coords()]}
    if frame is not None:
        document["setting"] = {"r_inf": frame.r_inf}
    if trace is not None:
        document["trace"] = trace.to_dict() if hasattr(trace, "to_dict") \
            else dict(trace)
    return document


def _require(document, key):
    try:
        return document[key]
    except (KeyError, TypeError):
        raise DomainError(f"point set file has no {key!r} entry") from None


def point_set_from_dict(document):
    """Parse a PointSetFile document.

    Returns
    -------
    S : PointSet
    frame : AffineFrame or None
        The affine setting, when the document records one.

    Raises
    ------
    DomainError
        If the field echo does not match the deterministic field for
        (p, e), or a triple is not canonical or repeats.
    """
    p, e, q = (int(_require(document, key)) for key in ("p", "e", "q"))
    field = field_new(p, e)
    if field.q != q:
        raise DomainError(f"q={q} does not match p^e = {field.q}")
    modulus = tuple(document.get("modulus", field.modulus))
    if modulus != tuple(field.modulus):
        raise DomainError(f"modulus {list(modulus)} differs from the "
                          f"field's {list(field.modulus)}")
    plane = build_plane(field)
    ids = []
    for triple in _require(document, "points"):
        triple = tuple(int(x) for x in triple)
        canonical = normalize(field, triple)
        if canonical != triple:
            raise DomainError(f"triple {list(triple)} is not canonical; "
                              f"expected {list(canonical)}")
        ids.append(plane.point_id(canonical))
    if len(set(ids)) != len(ids):
        raise DomainError("point set file repeats a point")
    S = PointSet.from_ids(plane, ids)
    frame = None
    setting = document.get("setting")
    if setting is not None:
        frame = affine_frame(plane, int(_require(setting, "r_inf")))
        if S.mask & ~frame.point_mask:
            raise DomainError(f"affine set meets r_inf (line {frame.r_inf})")
    logger.debug("Parsed %r", S)
    return S, frame


def save_point_set(path, S, frame=None, trace=None):
    with open(path, "w") as f:
        f.write(dump_json(point_set_to_dict(S, frame, trace)))


def load_point_set(path):
    """Read a PointSetFile; see point_set_from_dict."""
    with open(path) as f:
        try:
            document = json.load(f)
        except json.JSONDecodeError as err:
            raise DomainError(f"{path} is not valid JSON: {err}") from None
    return point_set_from_dict(document)


def spectrum_to_dict(report):
    """JSON form of a spectrum_report table."""
    rows = [{"k": int(k), **{name: int(value) for name, value in row.items()}}
            for k, row in report.iterrows()]
    return {"complete": bool(report.attrs.get("complete", True)),
            "rows": rows}


def spectrum_to_text(report):
    """Plain text table of a spectrum_report, labeled counts per size."""
    status = "complete" if report.attrs.get("complete", True) else \
        "incomplete"
    return f"{report.to_string()}\n({status}, labeled counts)\n"
