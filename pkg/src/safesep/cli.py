"""Command-line front end.

Reads graphs from a small line-oriented document format, runs the separator
queries, and emits either plain text or a single JSON document per
invocation.  Exit codes follow batch conventions: 0 success-with-answer,
1 property-false (e.g. a witness that the graph is not AT-free, or verify
mismatches), 2 answer-is-none, 64 usage errors (including refused oversize
brute-force scans), 65 parse errors, 70 internal consistency failures.

Graph document format, one directive per line (``#`` starts a comment):

    n=<int>            vertex count; vertices are 0..n-1; must come first
    w <int> ...        vertex weights, n values total (may span lines;
                       omitted entirely = all weights 1)
    e <u> <v>          an edge, u < v, no duplicates
    set <name> <ids>   a named vertex set, usable for --A/--B
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .atfree import find_asteroidal_triple
from .close_to import close_to
from .errors import InternalConsistencyError, NoSeparatorError
from .graph_core import WeightedGraph
from .min_safe_sep import QueryInstance, min_safe_separator
from .min_weight_separator import min_weight_st_separator
from .oracle import (
    SubsetCapError,
    close_family_brute,
    enumerate_minimal_st_separators,
    gen_atfree_rejection,
    gen_interval,
    min_safe_brute,
    sample_terminals,
)

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_NONE = 2
EXIT_USAGE = 64
EXIT_PARSE = 65
EXIT_INTERNAL = 70


class ParseError(Exception):
    """Malformed graph document; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str):
    """Parse a graph document into (WeightedGraph, named vertex sets)."""
    n = None
    weights = []
    saw_weights = False
    edges = []
    edge_seen = set()
    named = {}

    def need_n(line_no):
        if n is None:
            raise ParseError(line_no, "directive before the n=<int> header")

    def vertex(tok: str, line_no: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(line_no, f"expected a vertex id, got {tok!r}") from None
        if not 0 <= v < n:
            raise ParseError(line_no, f"vertex {v} out of range [0, {n})")
        return v

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if n is not None:
                raise ParseError(line_no, "duplicate n= header")
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(line_no, f"bad vertex count {line[2:]!r}") from None
            if n < 1:
                raise ParseError(line_no, "vertex count must be positive")
            continue
        fields = line.split()
        tag, args = fields[0], fields[1:]
        if tag == "w":
            need_n(line_no)
            saw_weights = True
            for tok in args:
                try:
                    w = int(tok)
                except ValueError:
                    raise ParseError(line_no, f"bad weight {tok!r}") from None
                if w < 1:
                    raise ParseError(line_no, f"weight {w} out of range (must be >= 1)")
                weights.append(w)
            if len(weights) > n:
                raise ParseError(line_no, f"more than {n} weights")
        elif tag == "e":
            need_n(line_no)
            if len(args) != 2:
                raise ParseError(line_no, "edge needs exactly two endpoints")
            u, v = (vertex(tok, line_no) for tok in args)
            if u == v:
                raise ParseError(line_no, f"self-loop at {u}")
            if u > v:
                raise ParseError(line_no, f"edge endpoints must satisfy u < v, got {u} {v}")
            if (u, v) in edge_seen:
                raise ParseError(line_no, f"duplicate edge {u} {v}")
            edge_seen.add((u, v))
            edges.append((u, v))
        elif tag == "set":
            need_n(line_no)
            if not args:
                raise ParseError(line_no, "set needs a name")
            name = args[0]
            if name in named:
                raise ParseError(line_no, f"duplicate set name {name!r}")
            named[name] = frozenset(vertex(tok, line_no) for tok in args[1:])
        else:
            raise ParseError(line_no, f"unknown directive {tag!r}")

    if n is None:
        raise ParseError(1, "missing n=<int> header")
    if saw_weights and len(weights) != n:
        raise ParseError(1, f"expected {n} weights, got {len(weights)}")
    if not saw_weights:
        weights = [1] * n
    return WeightedGraph(n, edges, weights), named


def serialize_graph(g: WeightedGraph, named=None) -> str:
    """Canonical document for a graph; parse_graph round-trips it."""
    lines = [f"n={g.n}"]
    lines.append("w " + " ".join(str(g.weight(v)) for v in range(g.n)))
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    for name in sorted(named or {}):
        ids = " ".join(str(v) for v in sorted(named[name]))
        lines.append(f"set {name} {ids}".rstrip())
    return "\n".join(lines) + "\n"


def _resolve_set(spec: str, named: dict, what: str) -> frozenset:
    """A --A/--B argument is either a named set from the document or a
    comma/space-separated id list."""
    if spec in named:
        return named[spec]
    toks = spec.replace(",", " ").split()
    if not toks:
        return frozenset()
    try:
        return frozenset(int(t) for t in toks)
    except ValueError:
        raise UsageError(
            f"{what}: {spec!r} is neither a named set nor a list of vertex ids"
        ) from None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_document(path: str):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(args, payload: dict, plain_lines) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in plain_lines:
            print(line)


def _answer_payload(status, separator=None, weight=None, family=None, started=None):
    return {
        "status": status,
        "separator": sorted(separator) if separator is not None else None,
        "weight": weight,
        "family": [sorted(S) for S in family] if family is not None else None,
        "runtime_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }


def _cmd_check_atfree(args) -> int:
    g, _ = parse_graph(_read_document(args.file))
    started = time.perf_counter()
    witness = find_asteroidal_triple(g)
    if witness is None:
        _emit(args, _answer_payload("atfree", started=started), ["atfree"])
        return EXIT_OK
    payload = _answer_payload("witness", started=started)
    payload["witness"] = {
        "triple": sorted(witness.triple),
        "path_ab": list(witness.path_ab),
        "path_ac": list(witness.path_ac),
        "path_bc": list(witness.path_bc),
    }
    _emit(
        args,
        payload,
        [f"asteroidal triple: {' '.join(str(v) for v in sorted(witness.triple))}"],
    )
    return EXIT_PROPERTY_FALSE


def _cmd_min_safe_sep(args) -> int:
    g, named = parse_graph(_read_document(args.file))
    A = _resolve_set(args.A, named, "--A")
    B = _resolve_set(args.B, named, "--B")
    started = time.perf_counter()
    try:
        answer = min_safe_separator(QueryInstance(g, A, B), verified=not args.fast)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if not answer.exists:
        _emit(args, _answer_payload("none", started=started), ["none"])
        return EXIT_NONE
    sep = sorted(answer.separator)
    _emit(
        args,
        _answer_payload("ok", answer.separator, answer.weight, started=started),
        [f"separator {' '.join(map(str, sep))}".rstrip(), f"weight {answer.weight}"],
    )
    return EXIT_OK


def _cmd_close_to(args) -> int:
    g, named = parse_graph(_read_document(args.file))
    A = _resolve_set(args.A, named, "--A") if args.A is not None else frozenset()
    started = time.perf_counter()
    try:
        family = close_to(g, args.s, args.t, A, verified=not args.fast)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"family {len(family)}"]
    lines.extend(" ".join(map(str, sorted(S))) if S else "(empty)" for S in family)
    _emit(args, _answer_payload("ok", family=family, started=started), lines)
    return EXIT_OK


def _cmd_min_sep(args) -> int:
    g, _ = parse_graph(_read_document(args.file))
    started = time.perf_counter()
    try:
        sep, weight = min_weight_st_separator(g, args.s, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except NoSeparatorError:
        _emit(args, _answer_payload("none", started=started), ["none"])
        return EXIT_NONE
    _emit(
        args,
        _answer_payload("ok", sep, weight, started=started),
        [f"separator {' '.join(map(str, sorted(sep)))}".rstrip(), f"weight {weight}"],
    )
    return EXIT_OK


def _cmd_enum_minimal(args) -> int:
    g, _ = parse_graph(_read_document(args.file))
    started = time.perf_counter()
    try:
        family = enumerate_minimal_st_separators(g, args.s, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [f"family {len(family)}"]
    lines.extend(" ".join(map(str, sorted(S))) if S else "(empty)" for S in family)
    _emit(args, _answer_payload("ok", family=family, started=started), lines)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.family == "interval":
        g = gen_interval(args.n, args.wmax, args.seed)
    else:
        g = gen_atfree_rejection(args.n, args.wmax, args.seed)
    sys.stdout.write(serialize_graph(g))
    return EXIT_OK


def _verify_one(task):
    """One verify-batch instance; top-level so worker processes can pick it
    up.  Returns (seed, ok, detail)."""
    seed, n, wmax = task
    rng = random.Random(f"verify:{seed}")
    if seed % 2 == 0:
        g = gen_interval(n, wmax, seed)
    else:
        g = gen_atfree_rejection(min(n, 12), wmax, seed)
    picked = sample_terminals(g, rng)
    if picked is None:
        return seed, True, "skipped (no admissible terminals)"
    A, B = picked
    fast = min_safe_separator(QueryInstance(g, A, B), verified=True)
    brute = min_safe_brute(g, A, B)
    if fast.exists != brute.exists or fast.weight != brute.weight:
        return seed, False, (
            f"n={n} A={sorted(A)} B={sorted(B)}: "
            f"algorithm {fast.separator} w={fast.weight}, "
            f"oracle {brute.separator} w={brute.weight}"
        )
    s, t = min(A), min(B)
    fam = close_to(g, s, t, A - {s}, verified=True)
    fam_brute = close_family_brute(g, s, t, A - {s})
    if fam != fam_brute:
        return seed, False, f"close families differ for A={sorted(A)}, s={s}, t={t}"
    return seed, True, "ok"


def _cmd_verify(args) -> int:
    if args.n > 12:
        raise UsageError("verify needs n <= 12 so the oracle stays feasible")
    tasks = [(seed, args.n, args.wmax) for seed in range(args.seeds)]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_verify_one, tasks))
    else:
        results = [_verify_one(t) for t in tasks]
    failures = [(seed, detail) for seed, ok, detail in results if not ok]
    checked = sum(1 for _, ok, detail in results if ok and detail == "ok")
    payload = {
        "status": "ok" if not failures else "mismatch",
        "separator": None,
        "weight": None,
        "family": None,
        "runtime_ms": None,
        "instances": len(results),
        "checked": checked,
        "mismatches": [{"seed": seed, "detail": d} for seed, d in failures],
    }
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"verified {checked}/{len(results)} instances")
        for seed, detail in failures:
            print(f"mismatch at seed {seed}: {detail}")
    return EXIT_OK if not failures else EXIT_PROPERTY_FALSE


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="safesep", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-atfree", help="report an asteroidal triple if any")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check_atfree)

    p = sub.add_parser("min-safe-sep", help="minimum-weight safe A,B-separator")
    p.add_argument("file")
    p.add_argument("--A", required=True, help="named set or vertex ids")
    p.add_argument("--B", required=True, help="named set or vertex ids")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true", help="skip the AT-free check")
    mode.add_argument(
        "--verified",
        action="store_true",
        help="check AT-freeness and structural invariants (default)",
    )
    p.set_defaults(func=_cmd_min_safe_sep)

    p = sub.add_parser("close-to", help="family of minimal separators close to sA")
    p.add_argument("file")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--A", default=None, help="named set or vertex ids (default empty)")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true", help="skip the AT-free check")
    mode.add_argument("--verified", action="store_true", help="(default)")
    p.set_defaults(func=_cmd_close_to)

    p = sub.add_parser("min-sep", help="minimum-weight s,t-separator")
    p.add_argument("file")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_min_sep)

    p = sub.add_parser("enum-minimal", help="all minimal s,t-separators (brute force)")
    p.add_argument("file")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=_cmd_enum_minimal)

    p = sub.add_parser("gen", help="generate a test instance document")
    p.add_argument("--family", choices=("interval", "reject"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--wmax", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="batch oracle-equivalence check")
    p.add_argument("--seeds", type=int, required=True, help="number of instances")
    p.add_argument("--n", type=int, required=True, help="vertices per instance")
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SubsetCapError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FileNotFoundError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
