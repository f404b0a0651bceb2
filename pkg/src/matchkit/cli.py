"""matchkit command line: analyze, verify, construct, enumerate.

Exit codes: 0 ok / no fails, 1 verification fails found, 2 input or usage error.
Flags override MATCHKIT_* environment variables, which override defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import TOOL_VERSION
from .connectivity import independence_number, minimum_vertex_cuts, vertex_connectivity
from .constructions import FAMILIES, ConstructionError, FamilySpec, build
from .decomposition import is_efc, is_equimatchable, is_factor_critical, property_report
from .enumeration import nonisomorphic_graphs
from .graph import GraphError, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .harness import ORDER, check_all
from .suite import run_suite

EXIT_OK, EXIT_FAILS, EXIT_USAGE = 0, 1, 2
MAX_ENUMERATE_N = 7
CUT_LIMIT = 64

FAMILY_ALIASES = {
    "Gk": "Gk_tight",
    "Gmn": "G_mn",
    "m1": "small_component_m1",
    "m2": "small_component_m2",
    "K": "complete",
    "Kmn": "complete_bipartite",
    "C": "odd_cycle",
}
# named flags for each family, in parameter order
FAMILY_PARAMS = {
    "complete": ("n",),
    "complete_bipartite": ("m", "n"),
    "odd_cycle": ("n",),
    "Gk_tight": ("k",),
    "G_mn": ("m", "n"),
    "small_component_m1": ("n", "k"),
    "small_component_m2": ("n", "k"),
}


class UsageError(Exception):
    pass


def _env(name: str, default, cast=str):
    raw = os.environ.get(f"MATCHKIT_{name}")
    if raw is None or raw == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise UsageError(f"bad value for MATCHKIT_{name}: {raw!r}") from None


def _dump(obj, pretty: bool = True) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=False)
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# input

def _detect_format(path: str | None, text: str) -> str:
    if path and path != "-":
        name = path[:-3] if path.endswith(".gz") else path
        if name.endswith((".g6", ".graph6")):
            return "graph6"
        if name.endswith((".txt", ".edges", ".el")):
            return "edgelist"
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            return "edgelist" if len(line.split()) == 2 else "graph6"
    return "graph6"


def read_graphs(path: str | None, fmt: str) -> list[tuple[str, object]]:
    """(descriptor, graph) pairs from a file or stdin; raises GraphError/OSError."""
    if path in (None, "-"):
        text = sys.stdin.read()
        where = "<stdin>"
    else:
        p = Path(path)
        if p.suffix == ".gz":
            import gzip

            text = gzip.decompress(p.read_bytes()).decode("ascii", errors="replace")
        else:
            text = p.read_text(encoding="ascii", errors="replace")
        where = path
    if fmt == "auto":
        fmt = _detect_format(path, text)
    if fmt == "edgelist":
        try:
            return [(where, parse_edgelist(text))]
        except GraphError as exc:
            raise GraphError(f"{where}: {exc}") from None
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            out.append((f"{where}:{lineno}", parse_graph6(line.strip())))
        except GraphError as exc:
            raise GraphError(f"{where}:{lineno}: {exc}") from None
    if not out:
        raise GraphError(f"{where}:1: no graph found (empty input)")
    return out


# ---------------------------------------------------------------------------
# analyze

def analysis_report(g, descriptor: str = "", budget_ms: int | None = None, verdicts: bool = True) -> dict:
    import time

    rep = property_report(g)
    alpha = independence_number(g)
    kappa = vertex_connectivity(g)
    cuts = []
    truncated = False
    if g.n >= 2 and g.edge_count < g.n * (g.n - 1) // 2:
        for cut in minimum_vertex_cuts(g, cap=CUT_LIMIT + 1):
            cuts.append(cut.summary())
        truncated = len(cuts) > CUT_LIMIT
        cuts = cuts[:CUT_LIMIT]
    doc = {
        "tool_version": TOOL_VERSION,
        "input": {"source": descriptor, "graph6": emit_graph6(g).decode(), "n": g.n, "m": g.edge_count},
        "nu": rep.nu,
        "def": rep.deficiency,
        "alpha": alpha.alpha,
        "alpha_witness": list(alpha.witness),
        "kappa": kappa,
        "flags": {**rep.flags(), "efc": rep.equimatchable and rep.factor_critical},
        "cuts": cuts,
        "cuts_truncated": truncated,
    }
    em = is_equimatchable(g)
    if not em:
        w = em.witness
        doc["equimatchability_witness"] = {
            "independent_set": list(w.independent_set),
            "maximal_matching": sorted([list(e) for e in w.maximal]),
        }
    if verdicts:
        deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000
        doc["verdicts"] = [v.to_dict() for v in check_all(g, deadline=deadline)]
    return doc


def _analysis_text(doc: dict) -> str:
    f = doc["flags"]
    lines = [
        f"graph {doc['input']['source']}  n={doc['input']['n']} m={doc['input']['m']}  graph6={doc['input']['graph6']}",
        f"  nu={doc['nu']} def={doc['def']} alpha={doc['alpha']} kappa={doc['kappa']}",
        "  flags: " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in f.items()),
    ]
    if "equimatchability_witness" in doc:
        w = doc["equimatchability_witness"]
        lines.append(f"  not equimatchable: I={w['independent_set']} maximal matching {w['maximal_matching']}")
    for c in doc["cuts"]:
        lines.append(f"  cut S={c['S']} components={c['component_sizes']}")
    if doc["cuts_truncated"]:
        lines.append(f"  (cut list truncated at {CUT_LIMIT})")
    for v in doc.get("verdicts", []):
        if v["status"] != "not_applicable":
            mark = " bounded" if v["bounded"] else ""
            lines.append(f"  {v['statement_id']}: {v['status']}{mark}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    graphs = read_graphs(args.input, args.format)
    docs = [analysis_report(g, where, args.budget_ms, not args.no_verdicts) for where, g in graphs]
    if args.ndjson:
        for d in docs:
            print(_dump(d, pretty=False))
    elif args.json:
        print(_dump(docs[0] if len(docs) == 1 else docs))
    else:
        print("\n".join(_analysis_text(d) for d in docs))
    fails = any(v["status"] == "fails" for d in docs for v in d.get("verdicts", []))
    return EXIT_FAILS if fails else EXIT_OK


# ---------------------------------------------------------------------------
# verify

def cmd_verify(args) -> int:
    if not (args.constructions or args.enumerate or args.corpus):
        raise UsageError("verify needs a source: --constructions, --enumerate N or --corpus PATH")
    if args.enumerate is not None and not 1 <= args.enumerate <= MAX_ENUMERATE_N:
        raise UsageError(f"--enumerate takes 1..{MAX_ENUMERATE_N}; feed larger graphs with --corpus FILE.g6")
    for path in args.corpus:
        if not Path(path).is_file():
            raise GraphError(f"{path}: no such corpus file")
    statements = args.statement or None
    if statements:
        unknown = sorted(set(statements) - set(ORDER) - {"observation_knn_removal"})
        if unknown:
            raise UsageError(f"unknown statement(s): {', '.join(unknown)}")

    def stream(rec):
        if args.ndjson:
            print(_dump(rec, pretty=False), flush=True)

    result = run_suite(
        constructions=args.constructions,
        enumerate_n=args.enumerate,
        corpora=args.corpus,
        statements=statements,
        jobs=args.jobs,
        budget_ms=args.budget_ms,
        fixtures=not args.no_fixtures,
        on_record=stream,
    )
    summary = {"tool_version": TOOL_VERSION, "summary": result.summary(), "fails_detail": result.fails}
    if args.ndjson:
        print(_dump(summary, pretty=False))
    elif args.json:
        print(_dump(summary))
    else:
        s = summary["summary"]
        print(f"{s['graphs']} graphs, {s['verdicts']} verdicts, {s['fails']} fails, {s['bounded']} bounded")
        width = max(len(k) for k in s["counts"]) if s["counts"] else 10
        print(f"{'statement':<{width}}  holds  fails  n/a")
        for sid, c in s["counts"].items():
            print(f"{sid:<{width}}  {c['holds']:>5}  {c['fails']:>5}  {c['not_applicable']:>5}")
        if s["fixture_search"]:
            fx = s["fixture_search"]
            print(f"fixture search: {fx['candidates_tried']} candidates (seed {fx['seed']})")
            for sid, r in fx["statements"].items():
                state = "found" if r["found"] else "NOT FOUND"
                print(f"  {sid}: {state}, {r['qualifying']} qualifying, {r['holds']} holds, {r['fails']} fails")
        for r in result.fails:
            print(f"FAIL {r['statement_id']} on {r['graph']} ({r['graph6']}): {r['certificate'].get('violation')}")
    return EXIT_FAILS if result.fails else EXIT_OK


# ---------------------------------------------------------------------------
# construct

def _construct_spec(args) -> FamilySpec:
    family = FAMILY_ALIASES.get(args.family, args.family)
    if family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(FAMILIES)}")
    if args.params:
        return FamilySpec(family, tuple(args.params))
    names = FAMILY_PARAMS.get(family)
    if names is None:
        raise UsageError(f"{family} takes its parameters via --params")
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"{family} requires --{name}")
        vals.append(v)
    return FamilySpec(family, tuple(vals))


def cmd_construct(args) -> int:
    spec = _construct_spec(args)
    try:
        c = build(spec)
    except ConstructionError as exc:
        raise UsageError(str(exc)) from None
    fmt = "graph6" if args.format == "auto" else args.format
    text = emit_graph6(c.graph).decode() if fmt == "graph6" else emit_edgelist(c.graph).rstrip("\n")
    if args.roles:
        Path(args.roles).write_text(_dump(c.role_map()) + "\n")
    if args.json:
        print(_dump({"family": spec.family, "params": list(spec.params), "n": c.graph.n,
                     "m": c.graph.edge_count, fmt: text, "roles": c.role_map()}))
    else:
        print(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# enumerate

def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= MAX_ENUMERATE_N:
        raise UsageError(f"enumerate takes n in 1..{MAX_ENUMERATE_N}; "
                         "for larger graphs use a graph6 corpus with 'verify --corpus FILE'")
    fmt = "graph6" if args.format == "auto" else args.format
    count = 0
    for g in nonisomorphic_graphs(args.n):
        if args.efc and not is_efc(g):
            continue
        if args.equimatchable and not is_equimatchable(g):
            continue
        if args.factor_critical and not is_factor_critical(g):
            continue
        if args.kappa is not None and vertex_connectivity(g) != args.kappa:
            continue
        count += 1
        if fmt == "graph6":
            print(emit_graph6(g).decode())
        else:
            print(emit_edgelist(g))
    if args.count:
        print(f"# {count} graphs", file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    fmt_default = _env("FORMAT", "auto")
    if fmt_default not in ("auto", "graph6", "edgelist"):
        raise UsageError(f"bad value for MATCHKIT_FORMAT: {fmt_default!r}")
    jobs_default = _env("JOBS", 1, int)
    budget_default = _env("BUDGET_MS", None, int)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("auto", "graph6", "edgelist"), default=fmt_default,
                        help="graph format (default: by extension / content)")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="emit a JSON report")
    out.add_argument("--ndjson", action="store_true", help="emit one JSON object per line")
    common.add_argument("--jobs", type=int, default=jobs_default, help="worker processes")
    common.add_argument("--budget-ms", type=int, default=budget_default,
                        help="per-graph time cap for checkers; exceeded work is marked bounded")

    ap = argparse.ArgumentParser(prog="matchkit", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="report matching properties of graphs")
    p.add_argument("input", nargs="?", default="-", help="input file (default stdin)")
    p.add_argument("--no-verdicts", action="store_true", help="skip the statement checkers")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", parents=[common], help="run statement checkers over graph sources")
    p.add_argument("--constructions", action="store_true", help="constructed families and fixtures")
    p.add_argument("--enumerate", type=int, metavar="N", help="all connected graphs up to N vertices")
    p.add_argument("--corpus", action="append", default=[], metavar="PATH", help="graph6 file (.gz ok)")
    p.add_argument("--statement", action="append", metavar="ID", help="restrict to these statements")
    p.add_argument("--no-fixtures", action="store_true", help="skip the fixture search")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", parents=[common], help="build a named graph family member")
    p.add_argument("--family", required=True, help=f"one of {', '.join(FAMILIES)} (aliases: Gk, Gmn, ...)")
    for name in ("k", "m", "n"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--params", type=int, nargs="+", help="raw parameter list")
    p.add_argument("--roles", metavar="PATH", help="write the role map as JSON")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("enumerate", parents=[common], help="connected graphs on n vertices up to isomorphism")
    p.add_argument("n", type=int)
    p.add_argument("--efc", action="store_true")
    p.add_argument("--equimatchable", action="store_true")
    p.add_argument("--factor-critical", action="store_true")
    p.add_argument("--kappa", type=int)
    p.add_argument("--count", action="store_true", help="print the count to stderr")
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None) -> int:
    try:
        parser = build_parser()
    except UsageError as exc:
        print(f"matchkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"matchkit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, OSError) as exc:
        print(f"matchkit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
