"""Constructive k-forested list coloring by peeling reducible configurations.

The graph is peeled one configuration at a time until nothing is left; the
deleted vertices are then colored back in reverse order, each from its list
minus a forbidden set built from the current partial coloring. Vertices
deleted at earlier peel levels are still uncolored when a later level is
extended, so all forbidden sets can be read off the full graph.
"""

from __future__ import annotations

import json
import logging
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .coloring import (
    BOUND_BY_PART,
    Coloring,
    c_k_minus_1,
    check_lists,
    params,
    verify,
    verify_partial,
)
from .configurations import Configuration, deletion_set, find_configuration
from .graph import Graph, induced_subgraph
from .solvers import BudgetExhausted, SolveBudget, kf_list_color

log = logging.getLogger(__name__)


class EmptyCandidates(RuntimeError):
    """Every color of a vertex's list is forbidden."""

    def __init__(self, vertex: int, forbidden: set[int]):
        super().__init__(f"no color left for vertex {vertex} (forbidden {sorted(forbidden)})")
        self.vertex = vertex
        self.forbidden = forbidden


class ColoringFailure(RuntimeError):
    def __init__(self, message: str, trace: "ExtensionTrace"):
        super().__init__(message)
        self.trace = trace


class MadHypothesisWarning(UserWarning):
    pass


@dataclass(frozen=True)
class Step:
    kind: str
    vertex: int
    forbidden: frozenset[int]
    color: int


@dataclass(frozen=True)
class Fallback:
    reason: str
    vertices: tuple[int, ...]


@dataclass
class ExtensionTrace:
    steps: list[Step] = field(default_factory=list)
    fallbacks: list[Fallback] = field(default_factory=list)
    configurations: list[Configuration] = field(default_factory=list)
    # called after every colored vertex when set (debug mode)
    check: Optional[Callable[[], None]] = field(default=None, repr=False, compare=False)

    def to_dict(self) -> dict:
        return {
            "configurations": [cfg.to_dict() for cfg in self.configurations],
            "steps": [
                {"kind": s.kind, "vertex": s.vertex,
                 "forbidden": sorted(s.forbidden), "color": s.color}
                for s in self.steps
            ],
            "fallbacks": [
                {"reason": f.reason, "vertices": list(f.vertices)} for f in self.fallbacks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _choose(c: Coloring, v: int, lst, forbidden: set[int], kind: str,
            trace: Optional[ExtensionTrace]) -> None:
    options = [a for a in lst if a not in forbidden]
    if not options:
        raise EmptyCandidates(v, forbidden)
    c[v] = min(options)
    if trace is not None:
        trace.steps.append(Step(kind, v, frozenset(forbidden), c[v]))
        if trace.check is not None:
            trace.check()


def _nbr_colors(g: Graph, c: Coloring, v: int) -> set[int]:
    return {c[u] for u in g.adjacency[v] if c[u] is not None}


def extend_c1(g: Graph, c: Coloring, cfg: Configuration, lists: Sequence, k: int,
              trace: Optional[ExtensionTrace] = None) -> Coloring:
    """Color the (<=1)-vertex avoiding its neighbour's color and its full colors."""
    v, u = cfg["v"], cfg["u"]
    forbidden: set[int] = set()
    if u is not None:
        forbidden = {c[u]} | c_k_minus_1(g, c, u, k)
    _choose(c, v, lists[v], forbidden, "C1", trace)
    return c


def extend_c2(g: Graph, c: Coloring, cfg: Configuration, lists: Sequence, k: int,
              trace: Optional[ExtensionTrace] = None) -> Coloring:
    v, u, w = cfg["v"], cfg["u"], cfg["w"]
    if c[u] == c[w]:
        forbidden = {c[u]} | _nbr_colors(g, c, u) | c_k_minus_1(g, c, w, k)
    else:
        forbidden = {c[u], c[w]} | c_k_minus_1(g, c, w, k)
    _choose(c, v, lists[v], forbidden, "C2", trace)
    return c


def extend_c3(g: Graph, c: Coloring, cfg: Configuration, lists: Sequence, k: int,
              trace: Optional[ExtensionTrace] = None) -> Coloring:
    v, u, w = cfg["v"], cfg["u"], cfg["w"]
    if c[u] == c[w]:
        shared = _nbr_colors(g, c, u) & _nbr_colors(g, c, w)
        forbidden = {c[u]} | shared | c_k_minus_1(g, c, w, k)
    else:
        forbidden = {c[u], c[w]} | c_k_minus_1(g, c, w, k)
    _choose(c, v, lists[v], forbidden, "C3", trace)
    return c


def extend_c4(g: Graph, c: Coloring, cfg: Configuration, lists: Sequence, k: int,
              trace: Optional[ExtensionTrace] = None) -> Coloring:
    """Color z, v, y, x in that order around a 4-vertex with three 2-neighbours."""
    v, x, y, z, w = cfg["v"], cfg["x"], cfg["y"], cfg["z"], cfg["w"]
    x_, y_, z_ = cfg["x_"], cfg["y_"], cfg["z_"]
    ck = lambda t: c_k_minus_1(g, c, t, k)  # noqa: E731

    _choose(c, z, lists[z], {c[w], c[z_]} | ck(z_), "C4", trace)
    _choose(c, v, lists[v], {c[w], c[z], c[x_]} | ck(w), "C4", trace)
    if c[v] == c[y_]:
        fy = {c[v], c[w], c[z]} | ck(y_)
    else:
        fy = {c[v], c[y_]} | ck(y_)
    _choose(c, y, lists[y], fy, "C4", trace)
    _choose(c, x, lists[x], {c[v], c[x_]} | ck(v) | ck(x_), "C4", trace)
    return c


def extend_c5(g: Graph, c: Coloring, cfg: Configuration, lists: Sequence, k: int,
              trace: Optional[ExtensionTrace] = None) -> Coloring:
    """Color x1, v, x2, x3, x4 around a 5-vertex whose neighbours are 2-vertices."""
    v = cfg["v"]
    x = {i: cfg[f"x{i}"] for i in range(1, 6)}
    o = {i: cfg[f"x{i}_"] for i in range(1, 6)}
    ck = lambda t: c_k_minus_1(g, c, t, k)  # noqa: E731

    _choose(c, x[1], lists[x[1]], {c[o[1]], c[x[5]]} | ck(o[1]), "C5", trace)
    _choose(c, v, lists[v], {c[x[1]], c[x[5]], c[o[2]], c[o[3]]}, "C5", trace)
    for i in (2, 3):
        _choose(c, x[i], lists[x[i]], {c[v], c[o[i]]} | ck(o[i]), "C5", trace)
    if c[v] == c[o[4]]:
        f4 = {c[v], c[x[1]], c[x[5]]} | ck(o[4])
    else:
        f4 = {c[v], c[o[4]]} | ck(v) | ck(o[4])
    _choose(c, x[4], lists[x[4]], f4, "C5", trace)
    return c


EXTENDERS = {"C1": extend_c1, "C2": extend_c2, "C3": extend_c3,
             "C4": extend_c4, "C5": extend_c5}


def _solve_rest(g: Graph, alive: Sequence[int], lists, k: int, c: Coloring,
                budget: SolveBudget) -> bool:
    sub, ids = induced_subgraph(g, alive)
    found = kf_list_color(sub, [lists[v] for v in ids], k, budget)
    if found is None:
        return False
    for new, old in enumerate(ids):
        c[old] = found[new]
    return True


def color(g: Graph, lists: Sequence, k: int, p: int, M: int, *,
          budget: Optional[SolveBudget] = None, debug: bool = False,
          relaxed: bool = False) -> tuple[Coloring, ExtensionTrace]:
    """k-forested coloring from ``lists`` by configuration peeling.

    Needs ``Delta(G) <= M`` and lists of size at least
    ``ceil(M/(k-1)) + p``. When the peel stalls, or an extension step finds
    no color, the affected subgraph is handed to the exact list-coloring
    solver and a fallback is recorded. The result is always verified; with
    ``debug`` every step is checked as well.
    """
    prm = params(M, k, p, relaxed=relaxed)
    lists = check_lists(g, lists)
    if g.n and g.max_degree() > M:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds M={M}")
    short = [v for v in range(g.n) if len(lists[v]) < prm.q]
    if short:
        raise ValueError(f"list of vertex {short[0]} is shorter than q={prm.q}")
    budget = budget or SolveBudget()
    trace = ExtensionTrace()
    c: Coloring = [None] * g.n
    if debug:
        def check() -> None:
            report = verify_partial(g, c, k)
            if not report.valid:
                step = trace.steps[-1]
                raise ColoringFailure(f"{step.kind} step at vertex {step.vertex} broke "
                                      f"the coloring: {report.to_dict()}", trace)
        trace.check = check

    alive = set(range(g.n))
    levels: list[tuple[Configuration, frozenset[int]]] = []
    while alive:
        sub, ids = induced_subgraph(g, alive)
        cfg = find_configuration(sub, p, k)
        if cfg is None:
            break
        cfg = Configuration(cfg.kind, {r: (None if t is None else ids[t])
                                       for r, t in cfg.bindings.items()})
        levels.append((cfg, frozenset(alive)))
        trace.configurations.append(cfg)
        alive -= set(deletion_set(cfg))

    if alive:
        _fallback(g, sorted(alive), lists, k, p, c, trace, budget, "no configuration")

    for cfg, level in reversed(levels):
        try:
            EXTENDERS[cfg.kind](g, c, cfg, lists, k, trace)
        except EmptyCandidates as exc:
            log.warning("%s; falling back on %d vertices", exc, len(level))
            for v in level:
                c[v] = None
            _fallback(g, sorted(level), lists, k, p, c, trace, budget,
                      f"empty candidates at {exc.vertex}")

    report = verify(g, c, k)
    if not report.valid:
        raise ColoringFailure(f"final coloring invalid: {report.to_dict()}", trace)
    bad = [v for v in range(g.n) if c[v] not in lists[v]]
    if bad:
        raise ColoringFailure(f"vertex {bad[0]} colored outside its list", trace)
    return c, trace


def _fallback(g, vertices, lists, k, p, c, trace, budget, reason) -> None:
    trace.fallbacks.append(Fallback(reason, tuple(vertices)))
    _warn_if_mad_allows(g, p)
    try:
        ok = _solve_rest(g, vertices, lists, k, c, budget)
    except BudgetExhausted as exc:
        raise ColoringFailure(f"fallback solver: {exc}", trace) from exc
    if not ok:
        raise ColoringFailure("no list coloring of the remaining subgraph exists", trace)


def _warn_if_mad_allows(g: Graph, p: int) -> None:
    from .mad import mad

    value: Fraction = mad(g)
    if value >= BOUND_BY_PART[p]:
        warnings.warn(f"mad(G) = {value} is not below {BOUND_BY_PART[p]}; "
                      "the peel is not guaranteed to progress", MadHypothesisWarning,
                      stacklevel=3)
    else:
        log.warning("fallback used although mad(G) = %s < %s", value, BOUND_BY_PART[p])
