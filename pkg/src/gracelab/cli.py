"""Command-line interface: generate / verify / search / survey / ndsg.

All payloads go to stdout as JSON (or DOT with --emit dot); diagnostics go
to stderr.  Exit codes: 0 success or valid, 1 invalid or nothing found,
2 usage error.  `--input -` reads the graph from stdin, so generate and
verify compose in a pipe.  Behavior is entirely flag-driven: no config
files, no environment variables.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .constructions import FAMILIES, FIXTURE_IDS, fixture
from .core import (
    InvalidParameter,
    LengthMismatch,
    ModeMismatch,
    TooLarge,
    UnknownFixture,
    from_json,
    to_dot,
    to_obj,
)
from .ndsg import build_gmn
from .search import SearchConfig, SearchGoal, SearchStatus, solve, survey_gmn
from .verify import LabelingMode, verify

_MODE_NAMES = [m.value for m in LabelingMode]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gracelab",
        description="Construct, verify, and search graceful-style labelings of signed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a labeled family member or a catalogued fixture")
    which = gen.add_mutually_exclusive_group(required=True)
    which.add_argument("--family", choices=sorted(FAMILIES))
    which.add_argument("--fixture", choices=list(FIXTURE_IDS))
    gen.add_argument("--m", type=int, help="positive-pendant count (required with --family)")
    gen.add_argument("--emit", choices=["json", "dot"], default="json")

    ver = sub.add_parser("verify", help="check the labeling attached to a graph JSON file")
    ver.add_argument("--mode", required=True, choices=_MODE_NAMES)
    ver.add_argument("--input", required=True, help="graph JSON path, or - for stdin")

    sea = sub.add_parser("search", help="search for a labeling of the input graph")
    sea.add_argument("--mode", required=True, choices=_MODE_NAMES)
    sea.add_argument("--input", required=True, help="graph JSON path, or - for stdin")
    sea.add_argument("--all", action="store_true", help="enumerate every witness")
    sea.add_argument("--node-budget", type=int, help="stop after this many assignment attempts")

    sur = sub.add_parser("survey", help="survey G(m,n) for additive labelings")
    sur.add_argument("--m", required=True, help="divisor values, e.g. 2..12 or 2,6")
    sur.add_argument("--n", required=True, help="vertex counts, e.g. 2..12 or 3,4")
    sur.add_argument("--catalog", help="JSONL catalog; existing (m,n) keys are skipped")
    sur.add_argument("--force", action="store_true", help="recompute keys already in the catalog")
    sur.add_argument("--node-budget", type=int, help="per-pair search budget (unknown on overrun)")

    nds = sub.add_parser("ndsg", help="emit the non-divisible sum graph G(m,n)")
    nds.add_argument("--m", type=int, required=True, help="divisor (> 1)")
    nds.add_argument("--n", type=int, required=True, help="number of integers (>= 1)")
    nds.add_argument("--emit", choices=["json", "dot"], default="json")

    return parser


def _parse_values(text: str, what: str) -> list[int]:
    """Parse '2..12', '2,6', or a mix; order preserved, duplicates dropped."""
    values: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if ".." in token:
            lo_s, _, hi_s = token.partition("..")
            try:
                lo, hi = int(lo_s), int(hi_s)
            except ValueError:
                raise InvalidParameter(f"bad {what} range {token!r}") from None
            if lo > hi:
                raise InvalidParameter(f"empty {what} range {token!r}")
            values.extend(range(lo, hi + 1))
        else:
            try:
                values.append(int(token))
            except ValueError:
                raise InvalidParameter(f"bad {what} value {token!r}") from None
    seen: set[int] = set()
    return [v for v in values if not (v in seen or seen.add(v))]


def _read_graph(source: str):
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    return from_json(text)


def _cmd_generate(args: argparse.Namespace) -> int:
    if args.family:
        if args.m is None:
            print("error: --family requires --m", file=sys.stderr)
            return 2
        built = FAMILIES[args.family](args.m)
        meta: dict = {"family": args.family, "m": args.m}
    else:
        if args.m is not None:
            print("error: --m is only valid with --family", file=sys.stderr)
            return 2
        built = fixture(args.fixture)
        meta = {"fixture": args.fixture}
    if args.emit == "dot":
        sys.stdout.write(to_dot(built.graph, built.labeling))
        return 0
    payload = to_obj(built.graph, built.labeling)
    meta["expected_mode"] = built.expected_mode.value
    meta["roles"] = {k: list(v) if isinstance(v, tuple) else v for k, v in built.roles.items()}
    payload["meta"] = meta
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    graph, labeling = _read_graph(args.input)
    if labeling is None:
        print("error: input carries no 'labeling' to verify", file=sys.stderr)
        return 2
    report = verify(graph, labeling, LabelingMode(args.mode))
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if report.valid else 1


def _cmd_search(args: argparse.Namespace) -> int:
    graph, _ = _read_graph(args.input)
    goal = SearchGoal.ENUMERATE_ALL if args.all else SearchGoal.FIND_ONE
    config = SearchConfig(mode=LabelingMode(args.mode), goal=goal, node_budget=args.node_budget)
    outcome = solve(graph, config)
    print(json.dumps(outcome.to_dict(), indent=2))
    if goal is SearchGoal.FIND_ONE and outcome.status is SearchStatus.EXHAUSTED_NONE:
        return 1
    return 0


def _cmd_survey(args: argparse.Namespace) -> int:
    m_values = _parse_values(args.m, "m")
    n_values = _parse_values(args.n, "n")
    config = SearchConfig(mode=LabelingMode.ADDITIVELY_GRACEFUL, node_budget=args.node_budget)
    records = survey_gmn(
        m_values, n_values, config, catalog_path=args.catalog, force=args.force
    )
    skipped = len(m_values) * len(n_values) - len(records)
    if skipped:
        print(f"skipped {skipped} pair(s) already in the catalog; --force recomputes", file=sys.stderr)
    for rec in records:
        print(json.dumps(rec.to_dict()))
    return 0


def _cmd_ndsg(args: argparse.Namespace) -> int:
    graph = build_gmn(args.m, args.n)
    if args.emit == "dot":
        sys.stdout.write(to_dot(graph))
        return 0
    payload = to_obj(graph)
    payload["meta"] = {"m": args.m, "n": args.n, "integers": list(range(1, args.n + 1))}
    print(json.dumps(payload, indent=2))
    return 0


_HANDLERS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "survey": _cmd_survey,
    "ndsg": _cmd_ndsg,
}


def run(argv: Sequence[str]) -> int:
    """Parse argv, dispatch, and return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (InvalidParameter, UnknownFixture, ModeMismatch, LengthMismatch, TooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))
