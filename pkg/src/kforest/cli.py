"""``kforest`` command line.

Exit codes: 0 success / valid / true, 1 invalid / false / counterexample,
2 usage or input error, 3 budget exhausted. Output is JSON unless
``--format text`` (or ``KFOREST_FORMAT=text``) is given. Rationals are
written as ``"num/den"`` strings.
"""

from __future__ import annotations

import argparse
import functools
import hashlib
import json
import os
import random
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import coloring as fc
from .colorer import ColoringFailure, color
from .configurations import find_configuration
from .discharging import RULESETS, apply, check_bound, frac_str
from .generators import FAMILIES, FamilySpec, generate
from .graph import (
    Graph,
    GraphFormatError,
    girth,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
)
from .mad import densest_subgraph, mad, mad_brute
from .solvers import (
    BudgetExhausted,
    SolveBudget,
    kf_choice_number,
    kf_choosable,
    kf_chromatic,
    kf_list_color,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# -- input helpers ------------------------------------------------------------


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _graph_format(path: str, override: Optional[str]) -> str:
    if override:
        return override
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "g6"
    if suffix in (".el", ".txt", ".edges"):
        return "el"
    raise UsageError(f"cannot infer graph format of {path!r}; pass --graph-format")


def _load_graph(args) -> tuple[Graph, str]:
    if args.input is None:
        raise UsageError("--in is required")
    fmt = "g6" if args.input == "-" and not args.graph_format else _graph_format(args.input, args.graph_format)
    raw = _read(args.input)
    digest = hashlib.sha256(raw).hexdigest()
    text = raw.decode("ascii", errors="strict") if fmt == "g6" else raw.decode()
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0]), digest
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return parse_edge_list(text), digest


def _load_json(path: str) -> dict:
    return json.loads(_read(path).decode())


def _budget(args) -> SolveBudget:
    return SolveBudget(max_nodes=args.max_nodes, timeout_ms=args.timeout_ms)


def _lists_for(args, g: Graph, q: Optional[int] = None) -> fc.ListAssignment:
    if args.lists:
        lists = fc.lists_from_json(_load_json(args.lists))
        return fc.check_lists(g, lists)
    if q is None:
        raise UsageError("--lists is required")
    if args.seed is None:
        return fc.uniform_lists(g.n, q)
    rng = random.Random(args.seed)
    return [frozenset(rng.sample(range(1, 2 * q + 1), q)) for _ in range(g.n)]


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"invalid rational {text!r}") from exc


# -- commands ------------------------------------------------------------------


def cmd_verify(args):
    g, digest = _load_graph(args)
    c = fc.coloring_from_json(_load_json(args.coloring))
    report = fc.verify(g, c, args.k)
    return report.to_dict(), (EXIT_OK if report.valid else EXIT_NO), digest


def cmd_mad(args):
    g, digest = _load_graph(args)
    if args.brute:
        return {"mad": frac_str(mad_brute(g))}, EXIT_OK, digest
    res = densest_subgraph(g)
    return {"mad": frac_str(2 * res.density), "witness": list(res.witness)}, EXIT_OK, digest


def cmd_girth(args):
    g, digest = _load_graph(args)
    value = girth(g)
    return {"girth": None if value == float("inf") else value}, EXIT_OK, digest


def cmd_chromatic(args):
    g, digest = _load_graph(args)
    t, witness = kf_chromatic(g, args.k, _budget(args))
    return {"chromatic": t, "colors": witness}, EXIT_OK, digest


def cmd_list_color(args):
    g, digest = _load_graph(args)
    found = kf_list_color(g, _lists_for(args, g), args.k, _budget(args))
    return {"colors": found}, (EXIT_OK if found is not None else EXIT_NO), digest


def cmd_choosable(args):
    g, digest = _load_graph(args)
    ok, counter = kf_choosable(g, args.k, args.q, _budget(args))
    payload = {"choosable": ok,
               "counterexample": None if counter is None else fc.lists_to_json(counter)["lists"]}
    return payload, (EXIT_OK if ok else EXIT_NO), digest


def cmd_choice_number(args):
    g, digest = _load_graph(args)
    return {"choice_number": kf_choice_number(g, args.k, _budget(args))}, EXIT_OK, digest


def cmd_find_config(args):
    g, digest = _load_graph(args)
    cfg = find_configuration(g, args.p, args.k)
    payload = {"configuration": None if cfg is None else cfg.to_dict()}
    return payload, (EXIT_OK if cfg is not None else EXIT_NO), digest


def cmd_color(args):
    g, digest = _load_graph(args)
    prm = fc.params(args.M, args.k, args.p)
    lists = _lists_for(args, g, prm.q)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            c, trace = color(g, lists, args.k, args.p, args.M, budget=_budget(args),
                             debug=args.debug)
    except ColoringFailure as exc:
        if args.trace:
            Path(args.trace).write_text(exc.trace.to_json())
        return {"colors": None, "error": str(exc)}, EXIT_NO, digest
    if args.trace:
        Path(args.trace).write_text(trace.to_json())
    payload = {"colors": c, "q": prm.q, "steps": len(trace.steps),
               "fallbacks": len(trace.fallbacks)}
    return payload, EXIT_OK, digest


def cmd_discharge(args):
    g, digest = _load_graph(args)
    report = check_bound(g, args.p, args.k)
    payload = report.to_dict()
    payload.update(apply(g, RULESETS[args.p]).to_dict())
    return payload, (EXIT_OK if report.consistent else EXIT_NO), digest


def cmd_bounds(args):
    digest = None
    g = None
    if args.input is not None:
        g, digest = _load_graph(args)
    if args.mad is not None:
        value = _fraction(args.mad)
    elif g is not None:
        value = mad(g)
    else:
        raise UsageError("give --mad or --in")
    prm = fc.params(args.M, args.k, args.p)
    payload = {"Q": prm.Q, "q": prm.q, "mad": frac_str(value),
               "upper_bound": fc.upper_bound(value, args.M, args.k)}
    if g is not None and g.n:
        payload["lower_bound"] = fc.lower_bound(g.max_degree(), args.k)
    return payload, EXIT_OK, digest


def cmd_gen(args):
    sizes = tuple(args.n or ())
    spec = FamilySpec(args.family, sizes, args.seed, args.subdivide)
    g = generate(spec)
    if args.out:
        _write_graph(g, args.out, args.graph_format)
    payload = {"family": args.family, "n": g.n, "m": g.m, "graph6": to_graph6(g)}
    return payload, EXIT_OK, None


def cmd_convert(args):
    g, digest = _load_graph(args)
    if args.out:
        _write_graph(g, args.out, args.to)
    return {"n": g.n, "m": g.m, "graph6": to_graph6(g),
            "edge_list": to_edge_list(g)}, EXIT_OK, digest


def _write_graph(g: Graph, path: str, fmt: Optional[str]) -> None:
    fmt = fmt or _graph_format(path, None)
    text = to_graph6(g) + "\n" if fmt == "g6" else to_edge_list(g)
    Path(path).write_text(text)


# -- parser ----------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    # --format defaults to None here; KFOREST_FORMAT is read per call in main
    parser = _Parser(prog="kforest", description="k-forested coloring of sparse graphs")
    parser.add_argument("--format", choices=("json", "text"), default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, *, graph=True, solver=False):
        sp = sub.add_parser(name)
        sp.set_defaults(func=func)
        if graph:
            sp.add_argument("--in", dest="input", required=name != "bounds")
        sp.add_argument("--graph-format", choices=("g6", "el"))
        sp.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        if solver:
            sp.add_argument("--max-nodes", type=int, default=5_000_000)
            sp.add_argument("--timeout-ms", type=int, default=None)
        return sp

    sp = add("verify", cmd_verify)
    sp.add_argument("--coloring", required=True)
    sp.add_argument("-k", type=int, required=True)

    sp = add("mad", cmd_mad)
    sp.add_argument("--brute", action="store_true")

    add("girth", cmd_girth)

    sp = add("chromatic", cmd_chromatic, solver=True)
    sp.add_argument("-k", type=int, required=True)

    sp = add("list-color", cmd_list_color, solver=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--lists", required=True)
    sp.set_defaults(seed=None)

    sp = add("choosable", cmd_choosable, solver=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)

    sp = add("choice-number", cmd_choice_number, solver=True)
    sp.add_argument("-k", type=int, required=True)

    sp = add("find-config", cmd_find_config)
    sp.add_argument("-p", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("-k", type=int, required=True)

    sp = add("color", cmd_color, solver=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-p", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("-M", type=int, required=True)
    sp.add_argument("--lists")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trace")
    sp.add_argument("--debug", action="store_true")

    sp = add("discharge", cmd_discharge)
    sp.add_argument("-p", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("-k", type=int, required=True)

    sp = add("bounds", cmd_bounds)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-p", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("-M", type=int, required=True)
    sp.add_argument("--mad")

    sp = add("gen", cmd_gen, graph=False)
    sp.add_argument("--family", choices=FAMILIES[:-1], required=True)
    sp.add_argument("--n", type=int, nargs="*")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--subdivide", type=int, default=0)
    sp.add_argument("--out")

    sp = add("convert", cmd_convert)
    sp.add_argument("--out")
    sp.add_argument("--to", choices=("g6", "el"))
    return parser


def _text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload, code, digest = args.func(args)
    except UsageError as exc:
        print(f"kforest: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhausted as exc:
        payload = {"status": "budget_exhausted", "message": str(exc), "stats": exc.stats}
        print(json.dumps(payload, sort_keys=True), file=sys.stdout)
        return EXIT_BUDGET
    except (GraphFormatError, ValueError, KeyError, OSError, UnicodeDecodeError) as exc:
        print(f"kforest: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = {"command": args.command, **({"input_digest": digest} if digest else {}),
               **payload}
    fmt = args.format or os.environ.get("KFOREST_FORMAT", "json")
    if fmt == "text":
        print(_text(payload))
    else:
        print(json.dumps(payload, sort_keys=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
