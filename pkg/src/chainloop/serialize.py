"""JSON encodings for graphs, divisors and derived objects.

Rationals travel as ``"num/den"`` strings (denominator optional).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .chain_graph import ChainGraph, Divisor, GraphPoint, Vertex, as_fraction, new_chain
from .lattice_path import LatticePath
from .picard import ClassData, ReducedRep


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, str):
        return as_fraction(s.strip())
    if isinstance(s, int):
        return Fraction(s)
    raise ValueError(f"expected an int or 'num/den' string, got {s!r}")


def graph_to_dict(G: ChainGraph) -> dict:
    return {"g": G.g, "loops": [{"ell": fmt(ell), "m": fmt(m)} for ell, m in G.loops]}


def graph_from_dict(data: dict) -> ChainGraph:
    return new_chain(int(data["g"]), [(parse_rational(x["ell"]), parse_rational(x["m"])) for x in data["loops"]])


def point_to_dict(p: GraphPoint) -> dict:
    if isinstance(p, Vertex):
        return {"vertex": p.i}
    return {"loop": p.i, "t": fmt(p.t)}


def point_from_dict(G: ChainGraph, data: dict) -> GraphPoint:
    if "vertex" in data:
        return G.canonicalize(Vertex(int(data["vertex"])))
    return G.point(int(data["loop"]), parse_rational(data["t"]))


def divisor_to_list(D: Divisor) -> list[dict]:
    return [{"point": point_to_dict(p), "coeff": c} for p, c in D.sorted_items()]


def divisor_from_list(G: ChainGraph, data: list[dict]) -> Divisor:
    return G.divisor([(point_from_dict(G, item["point"]), int(item["coeff"])) for item in data])


def class_to_dict(c: ClassData) -> dict:
    return {"d": c.d, "theta": [fmt(t) for t in c.theta]}


def class_from_dict(G: ChainGraph, data: dict) -> ClassData:
    return ClassData.make(G, int(data["d"]), [parse_rational(t) for t in data["theta"]])


def reduced_to_dict(R: ReducedRep) -> dict:
    return {"d0": R.d0, "x": [fmt(t) for t in R.x]}


def reduced_from_dict(data: dict) -> ReducedRep:
    return ReducedRep(int(data["d0"]), tuple(parse_rational(t) for t in data["x"]))


def path_to_dict(P: LatticePath) -> dict:
    return {"r": P.r, "p": [list(v) for v in P.p], "kinds": list(P.kinds)}


def path_from_dict(data: dict) -> LatticePath:
    return LatticePath(int(data["r"]), tuple(tuple(v) for v in data["p"]), tuple(data["kinds"]))


def load_json(path) -> object:
    return json.loads(Path(path).read_text())


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=2, default=str)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text


__all__ = [
    "class_from_dict",
    "class_to_dict",
    "divisor_from_list",
    "divisor_to_list",
    "dump_json",
    "fmt",
    "graph_from_dict",
    "graph_to_dict",
    "load_json",
    "parse_rational",
    "path_from_dict",
    "path_to_dict",
    "point_from_dict",
    "point_to_dict",
    "reduced_from_dict",
    "reduced_to_dict",
]
