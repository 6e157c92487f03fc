"""k-forested colorings: verification, neighbourhood statistics and bounds.

A coloring is a list indexed by vertex holding a positive int color or
``None`` for uncolored vertices. A list assignment is a list of frozensets.
A proper coloring is k-forested when the subgraph induced by any two color
classes is a forest of maximum degree below ``k``.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .graph import Graph

Coloring = list[Optional[int]]
ListAssignment = list[frozenset[int]]

BOUND_BY_PART = {1: Fraction(12, 5), 2: Fraction(8, 3), 3: Fraction(3)}


# -- violations and reports --------------------------------------------------


@dataclass(frozen=True)
class ImproperEdge:
    u: int
    v: int
    kind: str = field(default="improper_edge", init=False)


@dataclass(frozen=True)
class FrugalityViolation:
    """``count >= k`` neighbours of ``vertex`` share ``color``."""

    vertex: int
    color: int
    count: int
    kind: str = field(default="frugality", init=False)


@dataclass(frozen=True)
class BicoloredCycle:
    colors: tuple[int, int]
    cycle: tuple[int, ...]
    kind: str = field(default="bicolored_cycle", init=False)


Violation = Union[ImproperEdge, FrugalityViolation, BicoloredCycle]


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        out = []
        for viol in self.violations:
            if isinstance(viol, ImproperEdge):
                out.append({"kind": viol.kind, "edge": [viol.u, viol.v]})
            elif isinstance(viol, FrugalityViolation):
                out.append({"kind": viol.kind, "vertex": viol.vertex,
                            "color": viol.color, "count": viol.count})
            else:
                out.append({"kind": viol.kind, "colors": list(viol.colors),
                            "cycle": list(viol.cycle)})
        return {"valid": self.valid, "violations": out}


# -- verification ------------------------------------------------------------


class _PairForest:
    """Union-find over the edges of one two-color union, kept as a forest."""

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}
        self.adj: dict[int, list[int]] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        parent.setdefault(x, x)
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def add(self, u: int, v: int) -> Optional[tuple[int, ...]]:
        """Add edge ``uv``; return the closed cycle if it already connects them."""
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return self._path(u, v)
        self.parent[ru] = rv
        self.adj.setdefault(u, []).append(v)
        self.adj.setdefault(v, []).append(u)
        return None

    def _path(self, u: int, v: int) -> tuple[int, ...]:
        prev = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                break
            for y in self.adj.get(x, ()):
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        out = [v]
        while out[-1] != u:
            out.append(prev[out[-1]])
        return tuple(reversed(out))


def _check_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def _verify(g: Graph, c: Sequence[Optional[int]], k: int) -> VerificationReport:
    report = VerificationReport()
    for u, v in g.edges():
        if c[u] is not None and c[u] == c[v]:
            report.violations.append(ImproperEdge(u, v))
    for v in range(g.n):
        if c[v] is None:
            continue
        counts = Counter(c[u] for u in g.adjacency[v] if c[u] is not None)
        for color in sorted(counts):
            if color != c[v] and counts[color] >= k:
                report.violations.append(FrugalityViolation(v, color, counts[color]))
                break
    forests: dict[tuple[int, int], _PairForest] = {}
    done: set[tuple[int, int]] = set()
    for u, v in g.edges():
        a, b = c[u], c[v]
        if a is None or b is None or a == b:
            continue
        pair = (a, b) if a < b else (b, a)
        if pair in done:
            continue
        cyc = forests.setdefault(pair, _PairForest()).add(u, v)
        if cyc is not None:
            done.add(pair)
            report.violations.append(BicoloredCycle(pair, cyc))
    return report


def verify(g: Graph, c: Sequence[Optional[int]], k: int) -> VerificationReport:
    """Check a total coloring for properness, frugality and bicolored cycles.

    Degree in a two-class union is measured in the induced subgraph, so the
    degree condition is exactly: no vertex sees any other color ``k`` or
    more times. At most one witness is reported per edge, vertex or pair.
    """
    _check_k(k)
    _check_shape(g, c)
    missing = [v for v in range(g.n) if c[v] is None]
    if missing:
        raise ValueError(f"coloring is partial (vertex {missing[0]} uncolored)")
    return _verify(g, c, k)


def verify_partial(g: Graph, c: Sequence[Optional[int]], k: int) -> VerificationReport:
    """:func:`verify` restricted to the subgraph induced by colored vertices."""
    _check_k(k)
    _check_shape(g, c)
    return _verify(g, c, k)


def _check_shape(g: Graph, c: Sequence[Optional[int]]) -> None:
    if len(c) != g.n:
        raise ValueError(f"coloring has {len(c)} entries for {g.n} vertices")
    for v, col in enumerate(c):
        if col is not None and (not isinstance(col, int) or col < 1):
            raise ValueError(f"vertex {v} has invalid color {col!r}")


def is_total(c: Sequence[Optional[int]]) -> bool:
    return all(x is not None for x in c)


# -- neighbourhood statistics -----------------------------------------------


def neighbor_colors(g: Graph, c: Sequence[Optional[int]], v: int) -> Counter:
    """Multiset of colors on colored neighbours of ``v``."""
    return Counter(c[u] for u in g.neighbors(v) if c[u] is not None)


def c_k_minus_1(g: Graph, c: Sequence[Optional[int]], v: int, k: int) -> set[int]:
    """Colors used on exactly ``k - 1`` neighbours of ``v``.

    These are the colors that one more use next to ``v`` would make
    non-frugal.
    """
    _check_k(k)
    return {col for col, cnt in neighbor_colors(g, c, v).items() if cnt == k - 1}


# -- parameters and bounds --------------------------------------------------


@dataclass(frozen=True)
class Parameters:
    k: int
    p: int
    M: int
    Q: int
    q: int


def params(M: int, k: int, p: int, *, relaxed: bool = False) -> Parameters:
    """``Q = ceil(M/(k-1))`` and ``q = Q + p``.

    Theorem mode requires ``M >= k >= 4``, which forces ``Q >= 2`` and
    ``q >= p + 2``. ``relaxed`` only requires ``k >= 2`` and ``M >= 1``.
    """
    if p not in (1, 2, 3):
        raise ValueError(f"p must be 1, 2 or 3, got {p}")
    if relaxed:
        if k < 2 or M < 1:
            raise ValueError("relaxed mode needs k >= 2 and M >= 1")
    elif k < 4 or M < k:
        raise ValueError(f"need M >= k >= 4, got M={M}, k={k}")
    Q = -(-M // (k - 1))
    q = Q + p
    if not relaxed:
        assert Q >= 2 and q >= p + 2
    return Parameters(k=k, p=p, M=M, Q=Q, q=q)


def lower_bound(max_deg: int, k: int) -> int:
    """``ceil(Delta/(k-1)) + 1``; a vertex and its neighbours need that many colors."""
    _check_k(k)
    if max_deg < 0:
        raise ValueError("maximum degree must be nonnegative")
    return -(-max_deg // (k - 1)) + 1


def upper_bound(mad_value: Fraction, M: int, k: int) -> Optional[int]:
    """Guaranteed list size from the mad class, or None if no class applies."""
    Q = params(M, k, 1).Q
    mad_value = Fraction(mad_value)
    for p in (1, 2, 3):
        if mad_value < BOUND_BY_PART[p]:
            return Q + p
    return None


# -- JSON -------------------------------------------------------------------


def coloring_to_json(c: Sequence[Optional[int]]) -> dict:
    return {"colors": list(c)}


def coloring_from_json(data: Union[str, dict]) -> Coloring:
    if isinstance(data, str):
        data = json.loads(data)
    colors = data["colors"]
    if not isinstance(colors, list):
        raise ValueError("'colors' must be a list")
    for x in colors:
        if x is not None and (not isinstance(x, int) or isinstance(x, bool) or x < 1):
            raise ValueError(f"invalid color {x!r}")
    return list(colors)


def lists_to_json(lists: Sequence[Iterable[int]]) -> dict:
    return {"lists": [sorted(lst) for lst in lists]}


def lists_from_json(data: Union[str, dict]) -> ListAssignment:
    if isinstance(data, str):
        data = json.loads(data)
    lists = data["lists"]
    out = []
    for i, lst in enumerate(lists):
        if not lst:
            raise ValueError(f"list of vertex {i} is empty")
        if any(not isinstance(x, int) or isinstance(x, bool) or x < 1 for x in lst):
            raise ValueError(f"list of vertex {i} has an invalid color")
        out.append(frozenset(lst))
    return out


def uniform_lists(n: int, q: int) -> ListAssignment:
    return [frozenset(range(1, q + 1))] * n


def check_lists(g: Graph, lists: Sequence[Iterable[int]], size: Optional[int] = None) -> ListAssignment:
    if len(lists) != g.n:
        raise ValueError(f"{len(lists)} lists for {g.n} vertices")
    out = [frozenset(lst) for lst in lists]
    for v, lst in enumerate(out):
        if not lst:
            raise ValueError(f"list of vertex {v} is empty")
        if size is not None and len(lst) != size:
            raise ValueError(f"list of vertex {v} has size {len(lst)}, expected {size}")
    return out


__all__ = [
    "BicoloredCycle", "Coloring", "FrugalityViolation", "ImproperEdge",
    "ListAssignment", "Parameters", "VerificationReport", "c_k_minus_1",
    "coloring_from_json", "coloring_to_json", "is_total", "lists_from_json",
    "lists_to_json", "lower_bound", "neighbor_colors", "params",
    "uniform_lists", "upper_bound", "verify", "verify_partial",
]
