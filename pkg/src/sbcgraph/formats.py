"""JSON wire formats for graphs, profiles, closed graphs and families."""
from __future__ import annotations

import json
from typing import Any

from .closed import ClosedGraph
from .families import DisjointFamily
from .graph_core import BipartiteGraph, GraphError, SimpleGraph
from .sbc import Block, SbcProfile


class FormatError(ValueError):
    """Input is not one of the recognised JSON formats."""


def dumps(obj: Any) -> str:
    """Canonical byte form: compact separators, insertion-ordered keys."""
    return json.dumps(obj, separators=(",", ":"))


def bipartite_to_json(g: BipartiteGraph) -> dict:
    return {"type": "bipartite", "x": list(g.x_indices), "y": list(g.y_indices),
            "edges": [list(e) for e in g.edges]}


def simple_to_json(g: SimpleGraph) -> dict:
    return {"type": "simple", "n": g.n, "edges": [list(e) for e in sorted(g.edges)]}


def profile_to_json(p: SbcProfile) -> dict:
    return {"type": "sbc_profile", "q": p.q, "f": p.f, "qprime": p.qprime, "g": p.g, "M": list(p.M)}


def closed_to_json(c: ClosedGraph) -> dict:
    return {"type": "closed", "n": c.n, "cliques": [list(x) for x in c.cliques]}


def family_to_json(fam: DisjointFamily) -> dict:
    return {"blocks": [{"x": list(b.x_side), "y": list(b.y_side), "witness": list(b.witness)}
                       for b in fam.blocks]}


def family_from_json(obj: dict, host=None) -> DisjointFamily:
    try:
        blocks = tuple(Block(tuple(b["x"]), tuple(b["y"]), tuple(b["witness"])) for b in obj["blocks"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed family: {exc}") from exc
    return DisjointFamily(blocks, host)


def to_json(obj) -> dict:
    if isinstance(obj, BipartiteGraph):
        return bipartite_to_json(obj)
    if isinstance(obj, SimpleGraph):
        return simple_to_json(obj)
    if isinstance(obj, SbcProfile):
        return profile_to_json(obj)
    if isinstance(obj, ClosedGraph):
        return closed_to_json(obj)
    if isinstance(obj, DisjointFamily):
        return family_to_json(obj)
    raise TypeError(f"no JSON format for {type(obj).__name__}")


def from_json(obj: dict):
    """Parse any typed input object; raises FormatError on malformed data."""
    if not isinstance(obj, dict) or "type" not in obj:
        raise FormatError("input must be a JSON object with a 'type' key")
    kind = obj["type"]
    try:
        if kind == "bipartite":
            return BipartiteGraph.from_edges(obj["x"], obj["y"], [tuple(e) for e in obj["edges"]])
        if kind == "simple":
            return SimpleGraph.from_edges(obj["n"], [tuple(e) for e in obj["edges"]])
        if kind == "sbc_profile":
            return SbcProfile(obj["q"], obj["f"], obj["qprime"], obj["g"], tuple(obj["M"]))
        if kind == "closed":
            return ClosedGraph(obj["n"], tuple(tuple(c) for c in obj["cliques"]))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed {kind} input: {exc}") from exc
    except GraphError as exc:
        raise FormatError(str(exc)) from exc
    raise FormatError(f"unknown input type {kind!r}")


def load(path) -> Any:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    return from_json(obj)
