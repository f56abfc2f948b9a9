"""Command line entry point: the `planar` tool.

Every run emits a RunReport: the command, digests of consumed files, the
scalar mode and tolerances in force, wall time, and the result payload.
Exit codes: 0 success, 2 validation/input error, 3 size guard, 64 usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
import time
from fractions import Fraction

from . import biunitary, grouppa, jsonio, knots, network, pathalg, tl
from .coeff import scalar_to_json
from .errors import HypothesisNotMet, NotHadamard, NotSemisimple, SizeGuardExceeded

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_GUARD = 3
EXIT_USAGE = 64


def _parse_scalar(text: str):
    """Accept '3', '5/2' (exact) or '1.25' (binary64)."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    try:
        return Fraction(int(text))
    except ValueError:
        return float(text)


def _digest(path: str) -> str:
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()[:16]


def _load(path: str, digests: dict):
    digests[os.path.basename(path)] = _digest(path)
    with open(path) as fh:
        return json.load(fh)


class Report:
    def __init__(self, command: str):
        self.command = command
        self.t0 = time.monotonic()
        self.digests: dict[str, str] = {}
        self.mode = "exact"
        self.tolerances: dict[str, float] = {}
        self.payload = None

    def finish(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.digests,
            "scalar_mode": self.mode,
            "tolerances": self.tolerances,
            "wall_time_s": round(time.monotonic() - self.t0, 6),
            "result": self.payload,
        }


def _emit(report: Report, fmt: str) -> None:
    out = report.finish()
    if fmt == "json":
        print(jsonio.dumps(out))
    else:
        for key in ("command", "scalar_mode"):
            print(f"{key}: {out[key]}")
        if out["tolerances"]:
            print(f"tolerances: {out['tolerances']}")
        print(json.dumps(out["result"], indent=2, sort_keys=True, default=str))


def _scalar_json(v):
    if isinstance(v, int):
        v = Fraction(v)
    elif isinstance(v, float):
        v = complex(v)
    return scalar_to_json(v)


# --------------------------------------------------------------------------- tl


def cmd_tl(args, report: Report):
    if args.op == "basis":
        basis = tl.tl_basis(args.k)
        report.payload = {
            "k": args.k,
            "count": len(basis),
            "diagrams": [jsonio.diagram_to_json(d) for d in basis],
        }
    elif args.op == "mul":
        a = jsonio.element_from_json(_load(args.inputs[0], report.digests))
        b = jsonio.element_from_json(_load(args.inputs[1], report.digests))
        d1 = _parse_scalar(args.delta1)
        d2 = _parse_scalar(args.delta2 if args.delta2 is not None else args.delta1)
        if isinstance(d1, float) or isinstance(d2, float):
            report.mode = "binary64"
            report.tolerances["zero"] = args.tol
        p = tl.TLParams(d1, d2)
        prod = tl.tl_multiply(a, b, p)
        report.payload = {"k": prod.k, "element": jsonio.element_to_json(prod)}
    elif args.op == "jw":
        delta = _parse_scalar(args.delta)
        if isinstance(delta, float):
            report.mode = "binary64"
            report.tolerances["zero"] = args.tol
        f = tl.jones_wenzl(args.k, delta)
        report.payload = {"k": args.k, "element": jsonio.element_to_json(f)}
    elif args.op == "gram":
        delta = _parse_scalar(args.delta)
        if args.rank:
            report.mode = "binary64"
            report.tolerances["pivot_rel"] = args.tol if args.tol != 1e-9 else 1e-6
            rank = tl.gram_rank(args.k, float(delta), report.tolerances["pivot_rel"])
            report.payload = {"k": args.k, "delta": float(delta), "rank": rank}
        else:
            p = tl.TLParams(delta)
            g = tl.gram_matrix(args.k, p)
            report.payload = {
                "k": args.k,
                "matrix": [[_scalar_json(v) for v in row] for row in g],
            }
    return EXIT_OK


# -------------------------------------------------------------------------- net


def cmd_net(args, report: Report):
    net, q, labels = jsonio.network_from_json(_load(args.input, report.digests))
    q = args.q or q
    if q is None:
        raise ValueError("no q in network file or --q flag")
    spins = None
    if args.boundary:
        spins = [int(s) for s in args.boundary.split(",")]
    if args.normalized:
        value = network.eval_spin_normalized(net, q, labels, spins)
    else:
        value = network.eval_spin_raw(net, q, labels, spins)
    if isinstance(value, network.SpinLabel):
        report.payload = {"q": q, "open": True, "label": jsonio.spinlabel_to_json(value)}
    else:
        report.payload = {"q": q, "open": False, "value": _scalar_json(value)}
    return EXIT_OK


# ------------------------------------------------------------------------- knot


def cmd_knot(args, report: Report):
    if args.op == "bracket":
        link = jsonio.pdlink_from_json(_load(args.input, report.digests))
        b = knots.kauffman_bracket(link)
        report.payload = {
            "crossings": link.n_crossings,
            "bracket": _scalar_json(b),
        }
    elif args.op == "chromatic":
        obj = _load(args.input, report.digests)
        value = network.chromatic(obj["vertices"], [tuple(e) for e in obj["edges"]], args.q)
        report.payload = {"q": args.q, "colorings": _scalar_json(value)}
    elif args.op == "a4":
        net, _, _ = jsonio.network_from_json(_load(args.input, report.digests))
        value = knots.a4_evaluate(net)
        report.payload = {"q": 4, "value": _scalar_json(value)}
    return EXIT_OK


# -------------------------------------------------------------------------- had


_FAMILIES = {
    "fourier": biunitary.fourier_matrix,
    "sylvester": biunitary.sylvester_matrix,
    "paley": biunitary.paley_matrix,
}


def cmd_had(args, report: Report):
    if args.op == "make":
        h = _FAMILIES[args.family](args.q)
        biunitary.validate(h)
        obj = jsonio.hadamard_to_json(h)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(jsonio.dumps(obj))
            report.payload = {"written": args.out, "q": h.q}
        else:
            report.payload = obj
        return EXIT_OK

    h = jsonio.hadamard_from_json(_load(args.input, report.digests))
    if h.mode == "complex":
        report.mode = "binary64"
        report.tolerances["zero"] = h.tol
    if args.op == "validate":
        report.payload = biunitary.validate(h)
    elif args.op == "profile":
        prof = biunitary.profile(h)
        entries = {}
        for key in prof.values:
            a, b, c, d = key
            v = prof.value(a, b, c, d)
            if prof.mode == "root":
                entries[f"{a},{b},{c},{d}"] = {"m": v.m, "coeffs": list(v.coeffs)}
            else:
                entries[f"{a},{b},{c},{d}"] = [v.real, v.imag]
        report.payload = {
            "q": h.q,
            "nonzero": sum(1 for key in prof.values if prof.is_nonzero(*key)),
            "entries": entries if args.full else None,
        }
    elif args.op == "components":
        biunitary.validate(h)
        rep = biunitary.components(h)
        report.payload = {
            "q": h.q,
            "count": rep.count,
            "sizes": rep.sizes,
            "traces": [f"{t.numerator}/{t.denominator}" for t in rep.traces],
        }
    elif args.op == "standard":
        biunitary.validate(h)
        report.payload = biunitary.standardness_report(h)
    elif args.op == "check2117":
        biunitary.validate(h)
        report.payload = biunitary.prop_21117_check(h)
    elif args.op == "dimk":
        biunitary.validate(h)
        report.payload = {
            "q": h.q,
            "k": args.k,
            "dim": biunitary.dim_pu_k(h, args.k),
        }
    return EXIT_OK


# ------------------------------------------------------------------------ graph


def cmd_graph(args, report: Report):
    if args.op == "ade":
        g = pathalg.ade_graph(args.family, args.n)
        verdict = pathalg.ade_admissibility(args.family, args.n)
        if verdict.get("chirality"):
            verdict["chirality"] = [[z.real, z.imag] for z in verdict["chirality"]]
        report.payload = {"graph": jsonio.graph_to_json(g), "obstruction": verdict}
        return EXIT_OK
    if args.op == "tree":
        spec = jsonio.treespec_from_json(_load(args.spec, report.digests))
        g, words = pathalg.build_tree(spec, args.depth)
        report.payload = {
            "graph": jsonio.graph_to_json(g),
            "words": ["".join(map(str, w)) for w in words],
        }
        return EXIT_OK
    g = jsonio.graph_from_json(_load(args.input, report.digests))
    if args.op == "walks":
        walks = pathalg.walk_basis(g, args.k)
        report.payload = {
            "k": args.k,
            "count": len(walks),
            "walks": [list(w.vertices) for w in walks],
        }
    elif args.op == "perron":
        report.mode = "binary64"
        report.tolerances["residual"] = 1e-12
        tv = pathalg.perron_trace(g)
        report.payload = {"eigenvalue": tv.eigenvalue, "vector": tv.values}
    return EXIT_OK


# ------------------------------------------------------------------------ group


def cmd_group(args, report: Report):
    g = jsonio.group_from_json(_load(args.group, report.digests))
    lm = jsonio.labels_from_json(_load(args.labels, report.digests), g)
    report.payload = {
        "order": g.order,
        "labels": lm.size,
        "k": args.k,
        "dim": grouppa.dim_pk(lm, args.k),
    }
    return EXIT_OK


# --------------------------------------------------------------------- fixtures


def cmd_fixtures(args, report: Report):
    outdir = args.out or os.environ.get("PLANAR_FIXTURES", ".")
    os.makedirs(outdir, exist_ok=True)
    written = []

    def emit(name, obj):
        path = os.path.join(outdir, name)
        with open(path, "w") as fh:
            fh.write(jsonio.dumps(obj))
        written.append(path)

    fam = args.family
    if fam in _FAMILIES:
        h = _FAMILIES[fam](args.q)
        biunitary.validate(h)
        emit(f"{fam}{h.q}.json", jsonio.hadamard_to_json(h))
    elif fam == "ade":
        name = args.name.upper()
        if name.startswith(("A", "D")) and name[1:].isdigit():
            g = pathalg.ade_graph(name[0], int(name[1:]))
        else:
            g = pathalg.ade_graph(name)
        emit(f"{name.lower()}.json", jsonio.graph_to_json(g))
    elif fam == "links":
        emit("unknot.json", jsonio.pdlink_to_json(knots.PDLink([], free_loops=1)))
        emit("hopf.json", jsonio.pdlink_to_json(knots.PDLink([(1, 3, 2, 4), (3, 1, 4, 2)])))
        emit(
            "trefoil.json",
            jsonio.pdlink_to_json(knots.PDLink([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])),
        )
    elif fam == "tree":
        spec = pathalg.TreeSpec(
            ["p", "q"],
            {"p": 1, "q": 1},
            {"p": Fraction(1, 2), "q": Fraction(1, 2)},
            {"p": 1, "q": 2},
        )
        emit("tree_pq.json", jsonio.treespec_to_json(spec))
    else:
        raise ValueError(f"unknown fixture family {fam!r}")
    report.payload = {"written": written}
    return EXIT_OK


# --------------------------------------------------------------------- selftest


def cmd_selftest(args, report: Report):
    import random

    rng = random.Random(args.seed)
    checks = {}

    counts = [len(tl.tl_basis(k)) for k in range(6)]
    checks["catalan"] = counts == [1, 1, 2, 5, 14, 42]

    p = tl.TLParams(Fraction(3), Fraction(5))
    ok = True
    for k in range(2, 5):
        for i in range(1, k):
            e = tl.TLElement.from_diagram(tl.TLDiagram.e(i, k))
            sq = tl.tl_multiply(e, e, p)
            want = e.scale(Fraction(3) if i % 2 else Fraction(5))
            ok = ok and sq == want
    checks["loop_parity"] = ok

    ok = True
    for _ in range(50):
        k = rng.randint(1, 4)
        basis = tl.tl_basis(k)
        x, y, z = (tl.TLElement.from_diagram(rng.choice(basis)) for _ in range(3))
        lhs = tl.tl_multiply(tl.tl_multiply(x, y, p), z, p)
        rhs = tl.tl_multiply(x, tl.tl_multiply(y, z, p), p)
        ok = ok and lhs == rhs
    checks["associativity"] = ok

    f = tl.jones_wenzl(3, Fraction(2))
    pp = tl.TLParams(Fraction(2))
    checks["jones_wenzl"] = tl.tl_multiply(f, f, pp) == f

    h = biunitary.fourier_matrix(3)
    checks["hadamard_components"] = biunitary.components(h).count == 3
    checks["dim_pu_gate"] = biunitary.dim_pu_k(h, 2) == 3

    checks["ade"] = (
        not pathalg.ade_admissibility("D", 5)["admissible"]
        and not pathalg.ade_admissibility("E7")["admissible"]
    )

    tref = knots.PDLink([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)])
    checks["bracket_oracle"] = knots.kauffman_bracket(tref) == knots.kauffman_state_sum(tref)
    checks["a4_unknot"] = knots.a4_evaluate(knots.a4_unknot()) == Fraction(2)

    report.payload = {"seed": args.seed, "checks": checks, "passed": all(checks.values())}
    return EXIT_OK if all(checks.values()) else EXIT_INVALID


# ------------------------------------------------------------------------ main


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--tol", type=float, default=1e-9, help="float-mode zero tolerance")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument(
        "--threads", type=int, default=1,
        help="accepted for compatibility; evaluation is single-threaded",
    )

    ap = argparse.ArgumentParser(prog="planar", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    tl_p = sub.add_parser("tl", help="Temperley-Lieb diagram algebra")
    tl_sub = tl_p.add_subparsers(dest="op", required=True)
    b = tl_sub.add_parser("basis", parents=[common])
    b.add_argument("--k", type=int, required=True)
    m = tl_sub.add_parser("mul", parents=[common])
    m.add_argument("--in", dest="inputs", nargs=2, required=True)
    m.add_argument("--delta1", required=True)
    m.add_argument("--delta2")
    j = tl_sub.add_parser("jw", parents=[common])
    j.add_argument("--k", type=int, required=True)
    j.add_argument("--delta", required=True)
    g = tl_sub.add_parser("gram", parents=[common])
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--delta", required=True)
    g.add_argument("--rank", action="store_true")

    net_p = sub.add_parser("net", help="spin-model networks")
    net_sub = net_p.add_subparsers(dest="op", required=True)
    e = net_sub.add_parser("eval", parents=[common])
    e.add_argument("--in", dest="input", required=True)
    e.add_argument("--q", type=int)
    e.add_argument("--normalized", action="store_true")
    e.add_argument("--boundary")

    knot_p = sub.add_parser("knot", help="link invariants")
    knot_sub = knot_p.add_subparsers(dest="op", required=True)
    kb = knot_sub.add_parser("bracket", parents=[common])
    kb.add_argument("--in", dest="input", required=True)
    kc = knot_sub.add_parser("chromatic", parents=[common])
    kc.add_argument("--in", dest="input", required=True)
    kc.add_argument("--q", type=int, required=True)
    ka = knot_sub.add_parser("a4", parents=[common])
    ka.add_argument("--in", dest="input", required=True)

    had_p = sub.add_parser("had", help="generalized Hadamard matrices")
    had_sub = had_p.add_subparsers(dest="op", required=True)
    for name in ("validate", "profile", "components", "standard", "check2117"):
        hp = had_sub.add_parser(name, parents=[common])
        hp.add_argument("--in", dest="input", required=True)
        if name == "profile":
            hp.add_argument("--full", action="store_true")
    hd = had_sub.add_parser("dimk", parents=[common])
    hd.add_argument("--in", dest="input", required=True)
    hd.add_argument("--k", type=int, required=True)
    hm = had_sub.add_parser("make", parents=[common])
    hm.add_argument("--family", choices=sorted(_FAMILIES), required=True)
    hm.add_argument("--q", type=int, required=True)
    hm.add_argument("--out")

    graph_p = sub.add_parser("graph", help="principal graphs")
    graph_sub = graph_p.add_subparsers(dest="op", required=True)
    gw = graph_sub.add_parser("walks", parents=[common])
    gw.add_argument("--in", dest="input", required=True)
    gw.add_argument("--k", type=int, required=True)
    gp = graph_sub.add_parser("perron", parents=[common])
    gp.add_argument("--in", dest="input", required=True)
    gt = graph_sub.add_parser("tree", parents=[common])
    gt.add_argument("--spec", required=True)
    gt.add_argument("--depth", type=int, required=True)
    ga = graph_sub.add_parser("ade", parents=[common])
    ga.add_argument("--family", required=True)
    ga.add_argument("--n", type=int)

    group_p = sub.add_parser("group", help="group planar algebra dimensions")
    group_sub = group_p.add_subparsers(dest="op", required=True)
    gd = group_sub.add_parser("dim", parents=[common])
    gd.add_argument("--group", required=True)
    gd.add_argument("--labels", required=True)
    gd.add_argument("--k", type=int, required=True)

    fx = sub.add_parser("fixtures", parents=[common], help="write fixture files")
    fx.add_argument("--family", required=True)
    fx.add_argument("--q", type=int, default=4)
    fx.add_argument("--name", default="E6")
    fx.add_argument("--out")

    st = sub.add_parser("selftest", parents=[common], help="run the built-in invariant suite")
    st.set_defaults(op=None)

    return ap


_DISPATCH = {
    "tl": cmd_tl,
    "net": cmd_net,
    "knot": cmd_knot,
    "had": cmd_had,
    "graph": cmd_graph,
    "group": cmd_group,
    "fixtures": cmd_fixtures,
    "selftest": cmd_selftest,
}


def dispatch(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    group_cmd = args.cmd
    op = getattr(args, "op", None)
    report = Report(f"planar {group_cmd}" + (f" {op}" if op else ""))
    report.tolerances["zero"] = args.tol
    try:
        code = _DISPATCH[group_cmd](args, report)
    except SizeGuardExceeded as exc:
        report.payload = {"error": "size-guard", "detail": str(exc)}
        _emit(report, args.format)
        return EXIT_GUARD
    except (NotHadamard, NotSemisimple, HypothesisNotMet, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        report.payload = {"error": type(exc).__name__, "detail": str(exc)}
        _emit(report, args.format)
        return EXIT_INVALID
    _emit(report, args.format)
    return code


def main() -> None:
    sys.exit(dispatch())
