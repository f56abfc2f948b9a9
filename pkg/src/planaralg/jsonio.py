"""Canonical JSON encodings for every on-disk object.

Diagram match arrays are 1-indexed in files (point p of the code is point
p-1 internally).  All encoders sort keys deterministically so identical
values serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

from .biunitary import GenHadamard
from .coeff import scalar_from_json, scalar_to_json
from .grouppa import FiniteGroup, LabelMap
from .knots import PDLink
from .network import ShadedNetwork, SpinLabel
from .pathalg import PrincipalGraph, TreeSpec
from .tl import TLDiagram, TLElement


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def diagram_to_json(d: TLDiagram) -> dict:
    return {"k": d.k, "match": [m + 1 for m in d.match]}


def diagram_from_json(obj) -> TLDiagram:
    return TLDiagram(int(obj["k"]), [int(m) - 1 for m in obj["match"]])


def element_to_json(x: TLElement) -> list:
    items = sorted(x.terms.items(), key=lambda t: t[0].match)
    return [[diagram_to_json(d), scalar_to_json(c)] for d, c in items]


def element_from_json(obj, k: int | None = None) -> TLElement:
    terms = {}
    for dj, cj in obj:
        d = diagram_from_json(dj)
        terms[d] = scalar_from_json(cj)
        k = d.k if k is None else k
    if k is None:
        raise ValueError("empty element needs an explicit k")
    return TLElement(k, terms)


def spinlabel_to_json(w: SpinLabel) -> dict:
    entries = sorted((list(key), scalar_to_json(v)) for key, v in w.table.items())
    return {"arity": w.arity, "entries": [[k, v] for k, v in entries]}


def spinlabel_from_json(obj) -> SpinLabel:
    return SpinLabel(
        int(obj["arity"]),
        {tuple(key): scalar_from_json(v) for key, v in obj["entries"]},
    )


def network_to_json(net: ShadedNetwork, q: int | None = None, labels=None) -> dict:
    out = {
        "black_regions": net.black_regions,
        "boundary": list(net.boundary),
        "boxes": [{"label": name, "regions": list(regs)} for name, regs in net.boxes],
    }
    if q is not None:
        out["q"] = q
    if net.geometry:
        out["geometry"] = dict(net.geometry)
    if labels:
        out["labels"] = {name: spinlabel_to_json(w) for name, w in labels.items()}
    return out


def network_from_json(obj):
    net = ShadedNetwork(
        obj["black_regions"],
        [(b["label"], b["regions"]) for b in obj.get("boxes", [])],
        obj.get("boundary", []),
        obj.get("geometry"),
    )
    labels = {
        name: spinlabel_from_json(w) for name, w in obj.get("labels", {}).items()
    }
    return net, obj.get("q"), labels


def pdlink_to_json(link: PDLink) -> dict:
    out = {"crossings": [list(c) for c in link.crossings]}
    if link.free_loops:
        out["free_loops"] = link.free_loops
    return out


def pdlink_from_json(obj) -> PDLink:
    return PDLink(obj["crossings"], obj.get("free_loops", 0))


def hadamard_to_json(h: GenHadamard) -> dict:
    if h.mode == "root":
        return {
            "q": h.q,
            "mode": "root",
            "order": h.order,
            "exponents": [list(r) for r in h.exponents],
        }
    return {
        "q": h.q,
        "mode": "complex",
        "entries": [[[z.real, z.imag] for z in row] for row in h.entries],
    }


def hadamard_from_json(obj) -> GenHadamard:
    if obj.get("mode", "root") == "root":
        return GenHadamard(
            obj["q"], "root", order=obj["order"], exponents=obj["exponents"]
        )
    entries = np.array(
        [[complex(re, im) for re, im in row] for row in obj["entries"]]
    )
    return GenHadamard(obj["q"], "complex", entries=entries)


def graph_to_json(g: PrincipalGraph) -> dict:
    # collapse parallel copies back to multiplicities
    mult: dict[tuple, int] = {}
    for u, v in g.edges:
        key = (min(u, v), max(u, v))
        mult[key] = mult.get(key, 0) + 1
    return {
        "root": g.root,
        "vertices": g.n,
        "edges": [[u, v, m] for (u, v), m in sorted(mult.items())],
    }


def graph_from_json(obj) -> PrincipalGraph:
    edges = [(e[0], e[1], e[2] if len(e) > 2 else 1) for e in obj["edges"]]
    n = obj.get("vertices") or (1 + max(max(u, v) for u, v, _ in edges))
    return PrincipalGraph(n, edges, obj.get("root", 0))


def treespec_to_json(spec: TreeSpec) -> dict:
    return {
        "symbols": [
            {
                "name": s,
                "n": spec.n[s],
                "tau": scalar_to_json(Fraction(spec.tau[s])),
                "lambda": None if spec.lam[s] == float("inf") else spec.lam[s],
            }
            for s in spec.symbols
        ]
    }


def treespec_from_json(obj) -> TreeSpec:
    symbols, n, tau, lam = [], {}, {}, {}
    for s in obj["symbols"]:
        name = s["name"]
        symbols.append(name)
        n[name] = int(s["n"])
        tau[name] = scalar_from_json(s["tau"])
        lam[name] = float("inf") if s.get("lambda") is None else int(s["lambda"])
    return TreeSpec(symbols, n, tau, lam)


def group_to_json(g: FiniteGroup) -> dict:
    return {"order": g.order, "table": [list(r) for r in g.table], "identity": g.identity}


def group_from_json(obj) -> FiniteGroup:
    return FiniteGroup(obj["table"], obj.get("identity"))


def labels_to_json(lm: LabelMap) -> dict:
    return {"image": list(lm.image)}


def labels_from_json(obj, group: FiniteGroup) -> LabelMap:
    return LabelMap(group, obj["image"])
