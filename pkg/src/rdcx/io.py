"""Serialization: the JSON diagram format, witness trees, and DOT export.

Diagram format::

    {"name": "...", "elements": [grade0, grade1, ...]}

where each grade is an array of ``{"in": [...], "out": [...]}`` records whose
indices point into the grade below.  Grade-0 records must have empty faces;
duplicate indices and in/out overlaps are rejected.  Dumps are canonical:
face lists sorted, keys sorted by the emitter.
"""

from __future__ import annotations

import json
from typing import Union

from .core import FormatError, MINUS, OgPoset, StructureError, Subset, hasse_edge_kind, oriented_hasse
from .flows import extended_flow_graph, flow_graph, max_flow_graph
from .graphs import DirectedGraph


def diagram_to_dict(P: OgPoset) -> dict:
    out: dict = {}
    if P.name:
        out["name"] = P.name
    out["elements"] = [
        [{"in": sorted(fin), "out": sorted(fout)} for fin, fout in grade]
        for grade in P.grades
    ]
    return out


def diagram_from_dict(data: dict) -> OgPoset:
    if not isinstance(data, dict) or "elements" not in data:
        raise FormatError("diagram must be an object with an 'elements' array")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("'name' must be a string")
    grades = []
    elements = data["elements"]
    if not isinstance(elements, list):
        raise FormatError("'elements' must be an array of grades")
    for d, grade in enumerate(elements):
        if not isinstance(grade, list):
            raise FormatError(f"grade {d} must be an array")
        row = []
        for i, rec in enumerate(grade):
            if not isinstance(rec, dict) or set(rec) - {"in", "out"}:
                raise FormatError(f"element ({d},{i}) must be an object with 'in' and 'out'")
            fin, fout = rec.get("in", []), rec.get("out", [])
            for label, lst in (("in", fin), ("out", fout)):
                if not isinstance(lst, list) or any(not isinstance(j, int) for j in lst):
                    raise FormatError(f"element ({d},{i}) has a malformed '{label}' list")
                if len(set(lst)) != len(lst):
                    raise FormatError(f"element ({d},{i}) repeats an index in '{label}'")
            if set(fin) & set(fout):
                raise FormatError(f"element ({d},{i}) lists a face as both input and output")
            row.append((fin, fout))
        grades.append(row)
    try:
        return OgPoset(grades, name=name)
    except StructureError as exc:
        raise FormatError(str(exc)) from exc


def dump_diagram(P: OgPoset, path=None, pretty: bool = False) -> str:
    text = json.dumps(diagram_to_dict(P), sort_keys=True, indent=2 if pretty else None)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    return text


def load_diagram(source: Union[str, dict]) -> OgPoset:
    """Load from a dict, a JSON string, or a path to a JSON file."""
    if isinstance(source, dict):
        return diagram_from_dict(source)
    text = source
    if not text.lstrip().startswith("{"):
        with open(source) as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    return diagram_from_dict(data)


# -- witnesses ----------------------------------------------------------------


def witness_to_dict(w: tuple) -> dict:
    tag = w[0]
    if tag == "point":
        return {"point": {}}
    if tag == "paste":
        return {"paste": {"left": witness_to_dict(w[1]), "right": witness_to_dict(w[2]), "k": w[3]}}
    if tag == "atom":
        return {"atom": {"input": witness_to_dict(w[1]), "output": witness_to_dict(w[2])}}
    raise FormatError(f"unknown witness node {tag!r}")


def witness_from_dict(data: dict) -> tuple:
    if not isinstance(data, dict) or len(data) != 1:
        raise FormatError("witness node must be a single-key object")
    tag, body = next(iter(data.items()))
    if tag == "point":
        return ("point",)
    if tag == "paste":
        return ("paste", witness_from_dict(body["left"]), witness_from_dict(body["right"]), int(body["k"]))
    if tag == "atom":
        return ("atom", witness_from_dict(body["input"]), witness_from_dict(body["output"]))
    raise FormatError(f"unknown witness node {tag!r}")


# -- element lists -------------------------------------------------------------


def subset_to_list(U: Subset) -> list:
    return [[x.dim, x.index] for x in U]


# -- DOT ------------------------------------------------------------------------


def graph_by_name(P: OgPoset, spec: str) -> DirectedGraph:
    """Resolve 'hasse', 'flow:K', 'maxflow:K', or 'extflow:K'."""
    kind, _, rest = spec.partition(":")
    if kind == "hasse":
        return oriented_hasse(P)
    try:
        k = int(rest)
    except ValueError:
        raise FormatError(f"graph spec {spec!r} needs an integer level, e.g. flow:0")
    table = {"flow": flow_graph, "maxflow": max_flow_graph, "extflow": extended_flow_graph}
    if kind not in table:
        raise FormatError(f"unknown graph kind {kind!r}")
    return table[kind](P, k)


def to_dot(P: OgPoset, spec: str) -> str:
    """DOT text for one of the named graphs; Hasse input edges are dashed."""
    g = graph_by_name(P, spec)
    name = f"{P.name or 'diagram'}_{spec.replace(':', '')}"
    if spec == "hasse":
        return g.to_dot(name, edge_attr=lambda a, b: "style=dashed" if hasse_edge_kind(a, b) == MINUS else "style=solid")
    return g.to_dot(name)
