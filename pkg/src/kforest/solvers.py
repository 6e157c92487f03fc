"""Exact desk-scale oracles for k-forested coloring.

Backtracking over vertices in saturation order, pruning each assignment on
properness, frugality at every neighbour, and bicolored cycles through the
new vertex. Exceeding a :class:`SolveBudget` raises :class:`BudgetExhausted`;
"unknown" is never reported as "no".
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .coloring import Coloring, ListAssignment, check_lists, lower_bound
from .graph import Graph


@dataclass(frozen=True)
class SolveBudget:
    max_nodes: int = 5_000_000
    timeout_ms: Optional[int] = None
    max_universe: int = 64

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.max_universe < 1:
            raise ValueError("budget caps must be positive")
        if self.timeout_ms is not None and self.timeout_ms < 1:
            raise ValueError("budget caps must be positive")


class BudgetExhausted(RuntimeError):
    """A solver hit its budget; ``stats`` carries progress and known bounds."""

    def __init__(self, message: str, **stats):
        super().__init__(message)
        self.stats = stats


@dataclass
class _Meter:
    budget: SolveBudget
    nodes: int = 0
    start: float = field(default_factory=time.monotonic)

    def tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted("node budget exhausted", nodes=self.nodes)
        if self.budget.timeout_ms is not None and self.nodes % 256 == 0:
            if (time.monotonic() - self.start) * 1000 > self.budget.timeout_ms:
                raise BudgetExhausted("time budget exhausted", nodes=self.nodes)


class _State:
    """Partial coloring with neighbour color counts (0 = uncolored)."""

    def __init__(self, g: Graph, k: int):
        self.g = g
        self.k = k
        self.color = [0] * g.n
        self.counts: list[dict[int, int]] = [{} for _ in range(g.n)]

    def can_assign(self, v: int, a: int) -> bool:
        adj = self.g.adjacency
        color = self.color
        limit = self.k - 1
        for u in adj[v]:
            if color[u] == a or self.counts[u].get(a, 0) >= limit:
                return False
        groups: dict[int, list[int]] = {}
        for u in adj[v]:
            if color[u]:
                groups.setdefault(color[u], []).append(u)
        for b, nbrs in groups.items():
            if len(nbrs) > 1 and self._connected_pair(nbrs, a, b):
                return False
        return True

    def _connected_pair(self, targets: list[int], a: int, b: int) -> bool:
        """Whether two of ``targets`` share a component of the {a,b} union."""
        adj, color = self.g.adjacency, self.color
        pending = set(targets)
        while pending:
            s = pending.pop()
            seen = {s}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in seen and color[y] in (a, b):
                        if y in pending:
                            return True
                        seen.add(y)
                        queue.append(y)
        return False

    def assign(self, v: int, a: int) -> None:
        self.color[v] = a
        for u in self.g.adjacency[v]:
            cu = self.counts[u]
            cu[a] = cu.get(a, 0) + 1

    def unassign(self, v: int) -> None:
        a = self.color[v]
        self.color[v] = 0
        for u in self.g.adjacency[v]:
            cu = self.counts[u]
            if cu[a] == 1:
                del cu[a]
            else:
                cu[a] -= 1

    def pick(self) -> int:
        """Uncolored vertex with most distinct neighbour colors; ties by id."""
        best, best_sat = -1, -1
        for v in range(self.g.n):
            if self.color[v] == 0:
                sat = len(self.counts[v])
                if sat > best_sat:
                    best, best_sat = v, sat
        return best


def _search(g: Graph, k: int, lists: Sequence[Sequence[int]], meter: _Meter,
            symmetric: bool = False) -> Optional[Coloring]:
    """Depth-first search for a coloring from ``lists``.

    With ``symmetric`` all lists are ``1..t`` and a new color may only be the
    smallest unused one.
    """
    st = _State(g, k)
    remaining = g.n

    def rec(top: int) -> bool:
        nonlocal remaining
        if remaining == 0:
            return True
        v = st.pick()
        for a in lists[v]:
            if symmetric and a > top + 1:
                break
            meter.tick()
            if st.can_assign(v, a):
                st.assign(v, a)
                remaining -= 1
                if rec(max(top, a)):
                    return True
                remaining += 1
                st.unassign(v)
        return False

    if rec(0):
        return list(st.color)
    return None


def _check(k: int) -> None:
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")


def kf_chromatic(g: Graph, k: int, budget: Optional[SolveBudget] = None) -> tuple[int, Coloring]:
    """Least ``t`` with a k-forested ``t``-coloring, plus a witness.

    Iterative deepening from the degree lower bound. All-distinct colors
    are always k-forested, so ``t <= n``.
    """
    _check(k)
    if g.n == 0:
        return 0, []
    meter = _Meter(budget or SolveBudget())
    start = lower_bound(g.max_degree(), k) if g.m else 1
    for t in range(start, g.n + 1):
        palette = list(range(1, t + 1))
        try:
            found = _search(g, k, [palette] * g.n, meter, symmetric=True)
        except BudgetExhausted as exc:
            raise BudgetExhausted(str(exc), lower=t, upper=g.n, nodes=meter.nodes) from None
        if found is not None:
            return t, found
    raise AssertionError("all-distinct coloring must be k-forested")


def kf_list_color(g: Graph, lists: Sequence, k: int,
                  budget: Optional[SolveBudget] = None) -> Optional[Coloring]:
    """A k-forested coloring with ``c(v)`` in ``lists[v]``, or None if none exists."""
    _check(k)
    lists = check_lists(g, lists)
    meter = _Meter(budget or SolveBudget())
    return _search(g, k, [sorted(lst) for lst in lists], meter)


def _canonical_lists(used: int, q: int):
    """q-subsets of ``1..used+q`` whose new colors are exactly ``used+1..used+j``."""
    for combo in itertools.combinations(range(1, used + q + 1), q):
        fresh = [x for x in combo if x > used]
        if fresh == list(range(used + 1, used + 1 + len(fresh))):
            yield frozenset(combo), used + len(fresh)


def kf_choosable(g: Graph, k: int, q: int,
                 budget: Optional[SolveBudget] = None) -> tuple[bool, Optional[ListAssignment]]:
    """Decide k-forested q-choosability by adversarial list enumeration.

    Lists are drawn from a universe of ``q*n`` colors, which covers every
    assignment up to renaming; colors are canonically numbered by first
    appearance. Vertices are processed in BFS order while the set of all
    valid colorings of the prefix is maintained; an empty set is a
    counterexample. At the last vertex, a prefix coloring forbidding fewer
    than ``q`` colors settles every remaining list at once.
    """
    _check(k)
    if q < 1:
        raise ValueError("q must be positive")
    budget = budget or SolveBudget()
    if q * g.n > budget.max_universe:
        raise BudgetExhausted("universe exceeds cap", universe=q * g.n,
                              cap=budget.max_universe)
    if g.n == 0:
        return True, None
    meter = _Meter(budget)
    order = _bfs_order(g)
    st = _State(g, k)
    lists: list[Optional[frozenset[int]]] = [None] * g.n

    def extend(states, v, lst):
        out = []
        for colors in states:
            for u, a in zip(order, colors):
                st.assign(u, a)
            for a in sorted(lst):
                meter.tick()
                if st.can_assign(v, a):
                    out.append(colors + (a,))
            for u in order[:len(colors)]:
                st.unassign(u)
        return out

    def forbidden(states, v, used):
        out = []
        for colors in states:
            for u, a in zip(order, colors):
                st.assign(u, a)
            meter.tick()
            out.append(frozenset(a for a in range(1, used + 1) if not st.can_assign(v, a)))
            for u in order[:len(colors)]:
                st.unassign(u)
        return out

    def rec(i: int, states: list, used: int) -> Optional[int]:
        v = order[i]
        if i == g.n - 1 and i > 0:
            blocks = forbidden(states, v, used)
            if any(len(f) < q for f in blocks):
                return None
            for lst, _ in _canonical_lists(used, q):
                meter.tick()
                if all(lst <= f for f in blocks):
                    lists[v] = lst
                    return i
            return None
        for lst, new_used in _canonical_lists(used, q):
            lists[v] = lst
            nxt = extend(states, v, lst)
            if not nxt:
                return i
            if i + 1 < g.n:
                hit = rec(i + 1, nxt, new_used)
                if hit is not None:
                    return hit
        return None

    hit = rec(0, [()], 0)
    if hit is None:
        return True, None
    # complete the unassigned tail with fresh colors
    used = max(max(lst) for lst in lists if lst is not None)
    for v in order[hit + 1:]:
        lists[v] = frozenset(range(used + 1, used + q + 1))
        used += q
    return False, [lst for lst in lists]


def _bfs_order(g: Graph) -> list[int]:
    seen = [False] * g.n
    order = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    return order


def kf_choice_number(g: Graph, k: int, budget: Optional[SolveBudget] = None) -> int:
    """Least q with :func:`kf_choosable` true, starting from the chromatic number."""
    _check(k)
    if g.n == 0:
        return 0
    q, _ = kf_chromatic(g, k, budget)
    while True:
        ok, _ = kf_choosable(g, k, q, budget)
        if ok:
            return q
        q += 1
