"""permgraph command line.

    permgraph group-info "Q 8"
    permgraph graph "S 3" --dot
    permgraph analyze "SD 5 2 1 1" --json
    permgraph verify --max-order 200 --report report.json

Exit codes: 0 success, 1 verification counterexample, 2 parse/usage error,
3 undefined graph.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .analysis import analyze
from .errors import InvalidParameter, SizeLimitError, SpecParseError, UndefinedGraphError
from .graph import build_gamma_all, build_gamma_c
from .group import build_group, parse_spec
from .harness import DEFAULT_MAX_ORDER, FAMILY_NAMES, HarnessConfig, build_corpus, reports_to_json, run_all
from .subgroups import cyclic_subgroups

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_UNDEFINED = 3

log = logging.getLogger("permgraph")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _text(d: dict) -> str:
    def fmt(v):
        if v is None:
            return "null"
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)

    return "".join(f"{k}: {fmt(v)}\n" for k, v in d.items())


def cmd_group_info(args) -> int:
    g = build_group(parse_spec(args.spec))
    cat = cyclic_subgroups(g)
    info = {
        "group": str(g.spec),
        "order": g.order,
        "abelian": g.is_abelian,
        "cyclic": g.is_cyclic,
        "cyclic_subgroups": len(cat.all),
        "proper_cyclic_subgroups": len(cat.proper),
        "graph_defined": bool(cat.proper),
    }
    _emit(json.dumps(info, indent=2) + "\n" if args.json else _text(info), None)
    if not cat.proper:
        print(f"permgraph: {g.spec} has no proper nontrivial cyclic subgroup; the graph is undefined", file=sys.stderr)
        return EXIT_UNDEFINED
    return EXIT_OK


def _graph_for(args):
    g = build_group(parse_spec(args.spec))
    return build_gamma_all(g) if args.all_subgroups else build_gamma_c(g)


def cmd_graph(args) -> int:
    pg = _graph_for(args)
    _emit(pg.to_json() if args.json else pg.to_dot(), args.output)
    return EXIT_OK


def cmd_analyze(args) -> int:
    rep = analyze(_graph_for(args))
    _emit(rep.to_json() if args.json else rep.to_text(), args.output)
    return EXIT_OK


def _families(text: str | None) -> tuple[str, ...]:
    if not text:
        return FAMILY_NAMES
    fams = tuple(f.strip() for f in text.split(",") if f.strip())
    bad = [f for f in fams if f not in FAMILY_NAMES]
    if bad:
        raise InvalidParameter(f"unknown families {bad}; choose from {','.join(FAMILY_NAMES)}")
    return fams


def cmd_verify(args) -> int:
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("PERMGRAPH_THREADS", "1"))
    config = HarnessConfig(args.max_order, _families(args.families), threads=max(1, threads))
    corpus = build_corpus(config.max_order, config)
    reports = run_all(corpus)
    if args.report:
        _emit(reports_to_json(corpus, reports, timings=args.timings), args.report)
    print(f"corpus: {len(corpus)} groups, {len(corpus.defined())} with a defined graph (max order {config.max_order})")
    for note in corpus.scope_notes:
        print(f"scope: {note}")
    failed = 0
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.theorem}: {r.checked} checked, {len(r.counterexamples)} counterexamples")
        if args.verbose:
            for f in r.findings:
                print(f"  finding: {json.dumps(f, sort_keys=True)}")
        for c in r.counterexamples[:20]:
            print(f"  counterexample: {json.dumps(c, sort_keys=True)}")
        failed += not r.passed
    return EXIT_COUNTEREXAMPLE if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permgraph", description="Permutability graphs of cyclic subgroups.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("group-info", help="order, commutativity and cyclic subgroup count")
    s.add_argument("spec")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_group_info)

    for name, func, helptext in (
        ("graph", cmd_graph, "export the graph as DOT (default) or JSON"),
        ("analyze", cmd_analyze, "graph property report as text (default) or JSON"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("spec")
        fmt = s.add_mutually_exclusive_group()
        if name == "graph":
            fmt.add_argument("--dot", action="store_true")
        else:
            fmt.add_argument("--text", action="store_true")
        fmt.add_argument("--json", action="store_true")
        s.add_argument("-o", "--output", help="write to a file instead of stdout")
        s.add_argument("--all-subgroups", action="store_true", help="use every proper nontrivial subgroup")
        s.set_defaults(func=func)

    s = sub.add_parser("verify", help="check the classification statements over the corpus")
    s.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER)
    s.add_argument("--report", help="write the JSON report here")
    s.add_argument("--families", help=f"comma-separated subset of {','.join(FAMILY_NAMES)}")
    s.add_argument("--threads", type=int, default=None, help="worker processes (env PERMGRAPH_THREADS)")
    s.add_argument("--timings", action="store_true", help="include wall-clock durations in the report")
    s.add_argument("-v", "--verbose", action="store_true", help="print informational findings")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except UndefinedGraphError as exc:
        print(f"permgraph: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except (SpecParseError, InvalidParameter, SizeLimitError, ValueError) as exc:
        print(f"permgraph: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
