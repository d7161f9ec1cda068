"""JSON documents for Brauer graphs.

A document is an object with integer fields ``half_edges``, ``rho``, ``iota``
and ``multiplicity`` (by canonical vertex id), and optionally
``edge_weight`` (by canonical edge id) and ``arrow_degree`` (by half-edge).
The canonical form has sorted keys, no insignificant whitespace, a final
newline, and omits optional arrays that are entirely zero.
"""
from __future__ import annotations

import json

from .ribbon import BrauerError, BrauerGraph, RibbonGraph, validate, validate_brauer

REQUIRED = ("half_edges", "rho", "iota", "multiplicity")
OPTIONAL = ("edge_weight", "arrow_degree")


class DocumentError(BrauerError):
    pass


def _int_list(doc: dict, key: str) -> list[int]:
    value = doc[key]
    if not isinstance(value, list) or any(type(x) is not int for x in value):
        raise DocumentError(f"invalid input: {key} must be an array of integers")
    return value


def document_problems(doc) -> list[str]:
    """Structural and axiom violations of a decoded document."""
    if not isinstance(doc, dict):
        return ["document must be a JSON object"]
    missing = [k for k in REQUIRED if k not in doc]
    unknown = sorted(set(doc) - set(REQUIRED) - set(OPTIONAL))
    out = [f"missing key {k}" for k in missing] + [f"unknown key {k}" for k in unknown]
    if out:
        return out
    if type(doc["half_edges"]) is not int:
        return ["half_edges must be an integer"]
    try:
        arrays = {k: _int_list(doc, k) for k in REQUIRED[1:] + OPTIONAL if k in doc}
    except DocumentError as exc:
        return [str(exc).removeprefix("invalid input: ")]
    n = doc["half_edges"]
    if n <= 0 or n % 2:
        return [f"half_edges must be a positive even number, got {n}"]
    for key in ("rho", "iota"):
        if len(arrays[key]) != n:
            out.append(f"{key} has length {len(arrays[key])}, expected {n}")
    if out:
        return out
    g = RibbonGraph(tuple(arrays["rho"]), tuple(arrays["iota"]))
    out = validate(g, require_connected=True)
    if out:
        return out
    bg = BrauerGraph(
        g,
        tuple(arrays["multiplicity"]),
        tuple(arrays.get("edge_weight", ())),
        tuple(arrays.get("arrow_degree", ())),
    )
    return validate_brauer(bg)


def from_document(doc) -> BrauerGraph:
    problems = document_problems(doc)
    if problems:
        raise DocumentError("invalid input: " + "; ".join(problems))
    g = RibbonGraph(tuple(doc["rho"]), tuple(doc["iota"]))
    return BrauerGraph(
        g,
        tuple(doc["multiplicity"]),
        tuple(doc.get("edge_weight", ())),
        tuple(doc.get("arrow_degree", ())),
    )


def loads(text: str | bytes) -> BrauerGraph:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DocumentError(f"malformed json: not UTF-8 ({exc.reason})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"malformed json: {exc.msg} at line {exc.lineno} column {exc.colno}") from None
    return from_document(doc)


def to_document(bg: BrauerGraph) -> dict:
    g = bg.graph
    doc = {
        "half_edges": g.half_edge_count,
        "rho": list(g.rho),
        "iota": list(g.iota),
        "multiplicity": list(bg.multiplicity),
    }
    if any(bg.edge_weight):
        doc["edge_weight"] = list(bg.edge_weight)
    if any(bg.arrow_degree):
        doc["arrow_degree"] = list(bg.arrow_degree)
    return doc


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def dumps(bg: BrauerGraph) -> str:
    return canonical_json(to_document(bg))
