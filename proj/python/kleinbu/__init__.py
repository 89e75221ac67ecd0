"""Braid-group computations deciding the Borsuk-Ulam property for maps
between Klein bottles.

Algebraic values (``Word``, ``KleinElt``, ``Braid``) are native objects.
Homomorphism classes and reports are plain dicts with the same keys as the
command-line tool's ``--json`` output.
"""

from __future__ import annotations

import json
from typing import Any, Dict, Tuple

from ._kleinbu import (
    Braid,
    ConsistencyError,
    KleinElt,
    ParseError,
    PreconditionError,
    UnsupportedFamily,
    Word,
    eval_braid,
    expand,
    format_kernel,
    gmap,
    project,
    suite_names,
    theta,
)
from . import _kleinbu as _k

__all__ = [
    "Braid",
    "ConsistencyError",
    "KleinElt",
    "ParseError",
    "PreconditionError",
    "UnsupportedFamily",
    "Word",
    "certify",
    "classify",
    "decide",
    "eval_braid",
    "expand",
    "format_kernel",
    "gmap",
    "hom_class",
    "normalize",
    "project",
    "run_suite",
    "search_witness",
    "suite_names",
    "theta",
    "witness",
]

HomClass = Dict[str, int]
Pair = Tuple[int, int]


def hom_class(type: int, *, i: int = 0, r1: int = 0, r2: int = 0, s1: int = 0, s2: int = 0) -> HomClass:
    """A representative class. Types 1-3 take ``i``; type 4 takes ``r1``, ``r2``."""
    if type == 4:
        return {"type": 4, "r1": r1, "r2": r2, "s1": s1, "s2": s2}
    return {"type": type, "i": i, "s1": s1, "s2": s2}


def _call(fn, cls: HomClass, *args: Any) -> Dict[str, Any]:
    return json.loads(fn(json.dumps(cls), *args))


def normalize(img10: Pair, img01: Pair) -> HomClass:
    return json.loads(_k.normalize_json(tuple(img10), tuple(img01)))


def decide(cls: HomClass) -> Dict[str, Any]:
    return _call(_k.decide_json, cls)


def classify(img10: Pair, img01: Pair) -> Dict[str, Any]:
    cls = normalize(img10, img01)
    return {"class": cls, "verdict": decide(cls)}


def witness(cls: HomClass) -> Dict[str, Any]:
    return _call(_k.witness_json, cls)


def search_witness(cls: HomClass, max_length: int = 4, max_coord: int = 2, kernel_radius: int = 0) -> Dict[str, Any]:
    return _call(_k.search_json, cls, max_length, max_coord, kernel_radius)


def certify(cls: HomClass, window: int = 6, mn: int = 4) -> Dict[str, Any]:
    return _call(_k.certify_json, cls, window, mn)


def run_suite(name: str, seed: int = 20240601) -> Dict[str, Any]:
    return json.loads(_k.run_suite_json(name, seed))
