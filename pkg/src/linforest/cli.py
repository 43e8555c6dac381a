"""Command line entry point.

Exit codes: 0 success, 1 domain error (JSON report on stderr), 2 usage error.
Graphs travel as graph6 lines on stdin/stdout; reports are JSON by default.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable

from . import cliques, constructions, disintegration, enumeration, extremal, lemmas, structure
from .errors import LinforestError
from .forest import LinearForest, delta_f, format_forest, parse
from .formats import from_graph6, to_dot, to_graph6
from .graph import Graph
from .paths import contains_linear_forest

SCHEMA = "linforest/{}/1"
DEFAULT_SEED = 20240607


def _emit_json(kind: str, payload: dict, out) -> None:
    body = {"schema": SCHEMA.format(kind)}
    body.update(payload)
    out.write(json.dumps(body, sort_keys=True) + "\n")


def _emit_table(rows: list[dict], columns: list[str], out) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow(["" if r.get(c) is None else r.get(c) for c in columns])


def _emit_graph(g: Graph, fmt: str, out) -> None:
    if fmt == "dot":
        out.write(to_dot(g))
    else:
        out.write(to_graph6(g).decode() + "\n")


def _read_graphs(path: str | None, stdin) -> Iterable[Graph]:
    if path and path != "-":
        with open(path, "rb") as fh:
            data = fh.read()
    else:
        data = stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read().encode()
    for line in data.splitlines():
        line = line.strip()
        if line:
            yield from_graph6(line)


def _forest(text: str) -> LinearForest:
    return parse(text)


# -- subcommands --------------------------------------------------------------


def cmd_delta(a, out, stdin) -> None:
    f = _forest(a.forest)
    if a.format == "json":
        _emit_json("delta", {"forest": format_forest(f), "delta": delta_f(f)}, out)
    else:
        out.write(f"{delta_f(f)}\n")


def cmd_construct(a, out, stdin) -> None:
    fam = a.family
    if fam == "gf":
        g = constructions.build_gf(_forest(a.forest), a.n)
    elif fam == "gf-i":
        att = json.loads(a.attachment) if a.attachment else None
        if att is not None:
            att = [[tuple(p) for p in e] for e in att]
        g = constructions.build_gf_i(a.k, a.n, a.i, att)
    elif fam == "apex-cliques":
        g = constructions.apex_cliques(a.ell, a.t)
    elif fam == "apex-mixed":
        g = constructions.apex_mixed(a.ell, a.t1, a.t2)
    elif fam == "base-k4":
        g = constructions.base_plus_k4(a.base, a.t)
    elif fam == "clique-union":
        g = constructions.clique_union(a.ell, a.n)
    else:
        g = constructions.path_union([int(x) for x in a.orders.split("+")])
    _emit_graph(g, a.format, out)


def cmd_count(a, out, stdin) -> None:
    rows = []
    for g in _read_graphs(a.input, stdin):
        rows.append({"graph6": to_graph6(g).decode(), "s": a.s,
                     "count": cliques.count_cliques_parallel(g, a.s, a.threads), "source": "ENUMERATED"})
    _report("count", rows, ["graph6", "s", "count", "source"], a.format, out)


def cmd_formula(a, out, stdin) -> None:
    f = _forest(a.forest)
    row = {
        "forest": format_forest(f),
        "n": a.n,
        "s": a.s,
        "delta": delta_f(f),
        "gf_formula": cliques.gf_formula(f, a.n, a.s),
        "threshold_n": cliques.threshold_n(f, a.s),
        "threshold_exact": str(cliques.threshold_value(f, a.s)),
        "luo_bound": str(cliques.luo_bound(f.longest, a.s, a.n)),
        "path_turan_lower": cliques.path_turan_lower(f.longest, a.s, a.n),
        "source": "FORMULA",
    }
    try:
        row["theorem_value"] = cliques.theorem_value(f, a.n, a.s, a.path_turan)
    except LinforestError as e:
        if e.code != "domain_error":
            raise
        row["theorem_value"] = None  # needs --path-turan for this forest
    _report("formula", [row], list(row), a.format, out)


def cmd_contains(a, out, stdin) -> None:
    f = _forest(a.forest)
    rows = []
    for g in _read_graphs(a.input, stdin):
        w = contains_linear_forest(g, f)
        rows.append({"graph6": to_graph6(g).decode(), "forest": format_forest(f),
                     "contains": w is not None, "witness": None if w is None else w.as_lists()})
    _report("contains", rows, ["graph6", "forest", "contains"], a.format, out)


def cmd_core(a, out, stdin) -> None:
    f = _forest(a.forest)
    rows = []
    for g in _read_graphs(a.input, stdin):
        tr = disintegration.disintegrate(g, f, a.s)
        rows.append({
            "graph6": to_graph6(g).decode(),
            "steps": [[st.vertex, st.degree, st.destroyed] for st in tr.steps],
            "core": to_graph6(tr.core).decode(),
            "core_vertices": list(tr.core_vertices),
            "m": tr.core_order,
            "initial_count": tr.initial_count,
            "core_count": tr.core_count,
            "step_bound_ok": disintegration.verify_step_bound(tr, f, a.s),
            "telescoping_ok": disintegration.verify_telescoping(tr),
        })
    _report("core", rows, ["graph6", "m", "core", "initial_count", "core_count", "step_bound_ok"], a.format, out)


def cmd_enumerate(a, out, stdin) -> None:
    flt = enumeration.EnumFilter(
        connected=True if a.connected else (False if a.disconnected else None),
        min_degree=a.min_degree,
        f_free=_forest(a.f_free) if a.f_free else None,
        max_edges=a.max_edges,
    )
    graphs = list(enumeration.enumerate_graphs(a.n, flt, a.budget, a.threads))
    if a.format == "json":
        _emit_json("enumerate", {"n": a.n, "count": len(graphs),
                                 "graphs": [to_graph6(g).decode() for g in graphs]}, out)
        return
    for g in graphs:
        _emit_graph(g, a.format, out)


RECORD_COLUMNS = ["n", "s", "forest", "brute", "formula", "threshold", "agrees", "below_threshold", "extremal_graph6"]


def _record_rows(recs) -> list[dict]:
    rows = []
    for r in recs:
        d = r.as_dict()
        d["extremal_graph6"] = " ".join(d["extremal_graph6"])
        rows.append(d)
    return rows


def cmd_extremal(a, out, stdin) -> None:
    if a.path_ell is not None:
        f = LinearForest((a.path_ell,))
    else:
        f = _forest(a.forest)
    rec = extremal.brute_force_ex(a.n, a.s, f, a.budget, a.threads)
    if a.format == "json":
        _emit_json("extremal", rec.as_dict(), out)
    elif a.format == "graph6":
        for g in rec.extremal_graphs:
            out.write(g.decode() + "\n")
    else:
        _emit_table(_record_rows([rec]), RECORD_COLUMNS, out)


def cmd_reconcile(a, out, stdin) -> None:
    f = _forest(a.forest)
    recs = extremal.reconcile(range(a.n_min, a.n_max + 1), a.s, f, a.budget, a.threads)
    if a.format == "csv":
        _emit_table(_record_rows(recs), RECORD_COLUMNS, out)
    else:
        _emit_json("reconcile", {"forest": format_forest(f), "s": a.s, "rows": [r.as_dict() for r in recs]}, out)


def cmd_classify(a, out, stdin) -> None:
    f = _forest(a.forest)
    rows = []
    for g in _read_graphs(a.input, stdin):
        v = structure.classify(g, f)
        d = v.as_dict()
        d["graph6"] = to_graph6(g).decode()
        d["witness_ok"] = structure.witness_ok(g, f, v)
        rows.append(d)
    _report("classify", rows, ["graph6", "case"], a.format, out)


def cmd_audit(a, out, stdin) -> None:
    f = _forest(a.forest)
    if a.sample:
        if not (f.k == 2 and f.orders[0] == f.orders[1] and f.orders[0] % 2 == 1):
            raise LinforestError("sampling audit is defined for F = 2P_l with l odd")
        _emit_json("audit-sample", structure.sampling_audit(f.longest, a.n, a.sample, a.seed), out)
        return
    rep = structure.audit_theorem1(f, a.n, a.budget, a.threads)
    _emit_json("audit", rep.as_dict(), out)


def cmd_lemma_check(a, out, stdin) -> None:
    if a.which in ("claw", "claw2"):
        rep = lemmas.lemma_check(a.which, a.max_order if a.max_order is not None else 16)
        cols = ["forest", "delta", "free", "predicted"]
    else:
        rep = lemmas.lemma_check(a.which, a.max_order if a.max_order is not None else 7)
        cols = None
    if a.format == "csv" and cols:
        _emit_table(rep["rows"], cols, out)
        out.write(f"verdict,{rep['verdict']}\n")
    else:
        _emit_json("lemma-check", rep, out)


def _report(kind: str, rows: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "csv":
        _emit_table(rows, columns, out)
    elif len(rows) == 1:
        _emit_json(kind, rows[0], out)
    else:
        _emit_json(kind, {"results": rows}, out)


COMMANDS = {
    "delta": cmd_delta,
    "construct": cmd_construct,
    "count": cmd_count,
    "formula": cmd_formula,
    "contains": cmd_contains,
    "core": cmd_core,
    "enumerate": cmd_enumerate,
    "extremal": cmd_extremal,
    "reconcile": cmd_reconcile,
    "classify": cmd_classify,
    "audit": cmd_audit,
    "lemma-check": cmd_lemma_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "graph6", "dot"], default=None)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--input", default=None, help="graph6 file (default: stdin)")
    common.add_argument("--budget", type=int, default=None, help="search node cap")

    p = argparse.ArgumentParser(prog="linforest", description="Generalized Turan numbers for linear forests.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("delta", parents=[common], help="print delta_F")
    s.add_argument("--forest", required=True)

    s = sub.add_parser("construct", parents=[common], help="build a named graph")
    s.add_argument("family", choices=["gf", "gf-i", "apex-cliques", "apex-mixed", "base-k4", "clique-union", "path-union"])
    s.add_argument("--forest")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--i", type=int, default=0)
    s.add_argument("--attachment", help='JSON list per added edge of [endpoint, clique vertex] pairs')
    s.add_argument("--ell", type=int)
    s.add_argument("--t", type=int)
    s.add_argument("--t1", type=int)
    s.add_argument("--t2", type=int)
    s.add_argument("--base", choices=["K2", "E2"], default="K2")
    s.add_argument("--orders", help="path orders, e.g. 7+4")

    s = sub.add_parser("count", parents=[common], help="count s-cliques")
    s.add_argument("--s", type=int, required=True)

    s = sub.add_parser("formula", parents=[common], help="closed-form values")
    s.add_argument("--forest", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--path-turan", type=int, default=None, help="exact ex(n, K_s, P_l1)")

    s = sub.add_parser("contains", parents=[common], help="decide F-containment")
    s.add_argument("--forest", required=True)

    s = sub.add_parser("core", parents=[common], help="disintegration trace")
    s.add_argument("--forest", required=True)
    s.add_argument("--s", type=int, default=2)

    s = sub.add_parser("enumerate", parents=[common], help="isomorph-free graphs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--disconnected", action="store_true")
    s.add_argument("--min-degree", type=int, default=None)
    s.add_argument("--f-free", default=None)
    s.add_argument("--max-edges", type=int, default=None)

    s = sub.add_parser("extremal", parents=[common], help="exact ex(n, K_s, F)")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--forest")
    g.add_argument("--path-ell", type=int, default=None)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--s", type=int, required=True)

    s = sub.add_parser("reconcile", parents=[common], help="brute force vs closed form")
    s.add_argument("--forest", required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)

    s = sub.add_parser("classify", parents=[common], help="structural verdict")
    s.add_argument("--forest", required=True)

    s = sub.add_parser("audit", parents=[common], help="classify a whole filtered stream")
    s.add_argument("--forest", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sample", type=int, default=0, help="random apex-family samples instead")

    s = sub.add_parser("lemma-check", parents=[common], help="containment and path lemma sweeps")
    s.add_argument("which", choices=["claw", "claw2", "dirac", "chvatal-erdos"])
    s.add_argument("--max-order", type=int, default=None, help="|F| bound (claw) or n bound (sweeps)")
    return p


DEFAULT_FORMAT = {"construct": "graph6", "enumerate": "graph6", "delta": "graph6"}


def main(argv: list[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.format is None:
        args.format = DEFAULT_FORMAT.get(args.command, "json")
    buf = io.StringIO()
    try:
        COMMANDS[args.command](args, buf, stdin)
    except LinforestError as e:
        _emit_json("error", {"error": e.code, "message": str(e), "command": args.command}, stderr)
        return 1
    except (ValueError, KeyError, TypeError) as e:
        _emit_json("error", {"error": "domain_error", "message": str(e), "command": args.command}, stderr)
        return 1
    stdout.write(buf.getvalue())
    return 0
