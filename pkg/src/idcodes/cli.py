"""Command-line front end.

Exit codes: 0 success, 1 precondition not met (product not identifiable,
G disconnected), 2 unparseable input, 3 exact search refused by the vertex
cap, 4 a formula disagreed with exhaustive search.
"""

from __future__ import annotations

import argparse
import sys
import time
from contextlib import contextmanager
from typing import Any, Callable

from . import graph as gc
from .corpus import load_corpus, run_case
from .errors import (
    ClosedFormMismatch,
    GNotConnected,
    NotIdentifiableProduct,
    ParseError,
    TooLargeForExactSearch,
)
from .lexico import theorem_min_identifying, verify_theorem
from .parse import format_edge_list, load_graph
from .report import (
    RunReport,
    code_report_dict,
    emit,
    plan_dict,
    twins_dict,
)
from .solver import DEFAULT_CAP, Family, full_report, family_table
from .twins import twin_classes

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_MISMATCH = 4

KINDS = ("I", "I'", "I''")


class _Timer:
    def __init__(self) -> None:
        self.stages: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.stages[name] = round((time.perf_counter() - t0) * 1000, 3)


def _fmt_set(items) -> str:
    return "{" + ", ".join(str(i) for i in items) + "}"


def _fmt_pairs(pairs) -> str:
    return "{" + ", ".join(f"({g},{h})" for g, h in pairs) + "}"


def _show(value) -> str:
    return "undefined" if value is None else str(value)


def render_analyze(res: dict[str, Any]) -> str:
    lines = [f"graph: {res['graph']} ({res['n']} vertices)",
             f"identifiable: {'yes' if res['identifiable'] else 'no'}"]
    for kind in KINDS:
        p = res[kind]
        line = f"{kind:<4}= {_show(p['value']):<9}"
        if p["method"]:
            line += f" [{p['method']}]"
        if p["witness"] is not None:
            line += f"  witness {_fmt_set(p['witness'])}"
        if p["note"]:
            line += f"  ({p['note']})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def render_twins(res: dict[str, Any]) -> str:
    lines = [f"graph: {res['graph']} ({res['n']} vertices)"]
    for c in res["W"]:
        lines.append(f"W {_fmt_set(c)}")
    for c in res["U"]:
        lines.append(f"U {_fmt_set(c)}  closed twins, representative {min(c)}")
    for c in res["V"]:
        lines.append(f"V {_fmt_set(c)}  open twins, representative {min(c)}")
    lines.append(f"s(G) = {res['s']}, t(G) = {res['t']}")
    red = res["reduced"]
    u_rest = " ".join(_fmt_set(c) for c in red["U_rest"]) or "-"
    v_rest = " ".join(_fmt_set(c) for c in red["V_rest"]) or "-"
    lines.append(f"reduced partition: W0 = {_fmt_set(red['W0'])}; U rest: {u_rest}; V rest: {v_rest}")
    return "\n".join(lines) + "\n"


def render_plan(res: dict[str, Any]) -> str:
    inp = res["inputs"]
    lines = [
        f"LEX({res['G']},{res['H']}): branch {res['branch']}",
        f"  |V(G)| = {inp['|V(G)|']}, s(G) = {inp['s(G)']}, t(G) = {inp['t(G)']}",
        "  " + ", ".join(f"{k}(H) = {_show(inp[k + '(H)'])}" for k in KINDS),
        f"  predicted I(G[H]) = {res['predicted']}",
        f"  witness size = {_show(res['witness_size'])}",
    ]
    if res["witness"] is not None:
        lines.append(f"  witness {_fmt_pairs(res['witness'])}")
    if res["oracle"] is not None:
        verdict = "verified" if res["verified"] else "MISMATCH"
        lines.append(f"  oracle I(G[H]) = {res['oracle']}  {verdict}")
    return "\n".join(lines) + "\n"


def render_table(res: dict[str, Any]) -> str:
    lines = [f"{res['family']}: n, I, I', I''"]
    lines.append(f"{'n':>3}  " + "".join(f"{k:<20}" for k in KINDS).rstrip())
    for row in res["rows"]:
        cells = []
        for kind in KINDS:
            c = row[kind]
            text = _show(c["value"])
            if c["method"]:
                text += f" [{c['method']}]"
            cells.append(f"{text:<20}")
        lines.append(f"{row['n']:>3}  " + "".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def render_corpus(res: dict[str, Any]) -> str:
    lines = []
    for row in res["cases"]:
        status = "ok" if row["ok"] else "FAIL"
        if row["identifiable"]:
            detail = f"predicted={row['predicted']} oracle={row['oracle']}"
        else:
            detail = "not identifiable"
        lines.append(f"{status:<4} LEX({row['G']},{row['H']})  {detail}")
    lines.append(f"{res['passed']}/{len(res['cases'])} cases ok")
    return "\n".join(lines) + "\n"


def cmd_analyze(args, timer: _Timer) -> tuple[RunReport, int, Callable]:
    with timer.stage("parse"):
        G = load_graph(args.graph)
    with timer.stage("solve"):
        rep = full_report(G, cap=args.cap, use_closed_form=not args.no_closed_form)
    res = code_report_dict(rep)
    code = EXIT_CAP if any(p.refused for p in rep.params().values()) else EXIT_OK
    return RunReport("analyze", [args.graph], res), code, render_analyze


def cmd_twins(args, timer: _Timer) -> tuple[RunReport, int, Callable]:
    with timer.stage("parse"):
        G = load_graph(args.graph)
    with timer.stage("twins"):
        res = twins_dict(G, twin_classes(G))
    return RunReport("twins", [args.graph], res), EXIT_OK, render_twins


def cmd_product(args, timer: _Timer) -> tuple[RunReport, int, Callable]:
    with timer.stage("parse"):
        G, H = load_graph(args.g), load_graph(args.h)
    with timer.stage("product"):
        P = gc.lex_product(G, H)
    res = {"graph": P.label(), "n": P.n, "edges": [list(e) for e in P.edges()],
           "edge_list": format_edge_list(P)}
    return RunReport("product", [args.g, args.h], res), EXIT_OK, lambda r: r["edge_list"]


def cmd_verify(args, timer: _Timer) -> tuple[RunReport, int, Callable]:
    with timer.stage("parse"):
        G, H = load_graph(args.g), load_graph(args.h)
    with timer.stage("theorem" if not args.oracle else "theorem+oracle"):
        if args.oracle:
            plan = verify_theorem(G, H, cap=args.cap)
        else:
            plan = theorem_min_identifying(G, H, cap=args.cap)
    code = EXIT_MISMATCH if plan.verified is False else EXIT_OK
    return RunReport("verify", [args.g, args.h], plan_dict(plan)), code, render_plan


def cmd_table(args, timer: _Timer) -> tuple[RunReport, int, Callable]:
    family = Family.PATH if args.family == "paths" else Family.CYCLE
    with timer.stage("table"):
        rows = family_table(family, args.n_max, cap=args.cap)
    res = {"family": args.family, "rows": rows}
    return RunReport("table", [args.family, str(args.n_max)], res), EXIT_OK, render_table


def cmd_corpus(args, timer: _Timer) -> tuple[RunReport, int, Callable]:
    cap = args.cap if args.cap is not None else 32
    with timer.stage("load"):
        cases = load_corpus(args.file)
    with timer.stage("verify"):
        rows = [run_case(c, cap=cap) for c in cases]
    passed = sum(r["ok"] for r in rows)
    res = {"cases": rows, "passed": passed}
    code = EXIT_OK if passed == len(rows) else EXIT_MISMATCH
    return RunReport("corpus", [args.file or "<bundled>"], res), code, render_corpus


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None,
                        help=f"exact-search vertex cap (default {DEFAULT_CAP})")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=None,
                        help="reserved for randomized corpus generation")
    common.add_argument("--timing", action="store_true",
                        help="include per-stage wall-clock times in structured output")

    parser = argparse.ArgumentParser(prog="idcodes",
                                     description="Identifying codes of graphs and lexicographic products.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="I, I', I'' of a graph")
    p.add_argument("graph", help="expression (P5, C9, K3, S3, LEX(P3,P4)) or edge-list file")
    p.add_argument("--no-closed-form", action="store_true",
                   help="always use exact search")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("twins", parents=[common], help="twin classes, s(G), t(G)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_twins)

    p = sub.add_parser("product", parents=[common], help="edge list of G[H]")
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", parents=[common], help="formula for I(G[H]), optionally checked")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--oracle", action=argparse.BooleanOptionalAction, default=False,
                   help="also solve G[H] exactly and compare")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", parents=[common], help="I, I', I'' for paths or cycles")
    p.add_argument("family", choices=("paths", "cycles"))
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("corpus", parents=[common], help="verify every case of a corpus file")
    p.add_argument("file", nargs="?", default=None, help="corpus file (default: bundled)")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    timer = _Timer()
    try:
        report, code, render = args.func(args, timer)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TooLargeForExactSearch as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ClosedFormMismatch as exc:
        print(f"MISMATCH: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (NotIdentifiableProduct, GNotConnected) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if args.timing:
        report.timing = timer.stages
    if args.format == "structured":
        sys.stdout.write(emit(report))
    else:
        sys.stdout.write(render(report.results))
    return code


if __name__ == "__main__":
    sys.exit(main())
