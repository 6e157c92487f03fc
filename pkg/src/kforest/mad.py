"""Exact maximum average degree.

``mad(G)`` is twice the maximum density ``|E(H)|/|V(H)|`` over nonempty
induced subgraphs. The fast path is Goldberg's parametric min-cut network
driven by an exact rational bisection; ``mad_brute`` enumerates subsets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, density

BRUTE_FORCE_CAP = 20


@dataclass(frozen=True)
class DensestResult:
    density: Fraction
    witness: tuple[int, ...]


class _Dinic:
    """Integer max-flow on a small network; capacities are Python ints."""

    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, c: int, rc: int = 0) -> None:
        self.head[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.head[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(rc)

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in self.head[v]:
                if self.cap[e] > 0 and level[self.to[e]] < 0:
                    level[self.to[e]] = level[v] + 1
                    queue.append(self.to[e])
        return level if level[t] >= 0 else None

    def _push(self, v: int, t: int, f: int, level: list[int], it: list[int]) -> int:
        if v == t:
            return f
        edges = self.head[v]
        while it[v] < len(edges):
            e = edges[it[v]]
            w = self.to[e]
            if self.cap[e] > 0 and level[w] == level[v] + 1:
                got = self._push(w, t, min(f, self.cap[e]), level, it)
                if got:
                    self.cap[e] -= got
                    self.cap[e ^ 1] += got
                    return got
            it[v] += 1
        return 0

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        limit = sum(self.cap[e] for e in self.head[s])
        while (level := self._levels(s, t)) is not None:
            it = [0] * self.n
            while f := self._push(s, t, limit, level, it):
                flow += f
        return flow

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for e in self.head[v]:
                if self.cap[e] > 0 and self.to[e] not in seen:
                    seen.add(self.to[e])
                    queue.append(self.to[e])
        return seen


def _denser_than(g: Graph, guess: Fraction) -> list[int] | None:
    """A vertex set with density strictly above ``guess``, or None.

    With ``guess = a/b`` the network has source->v capacity ``b*m``,
    v->sink capacity ``b*m + 2a - b*d(v)`` and capacity ``b`` on each edge
    in both directions. A cut with source side ``S`` costs
    ``b*m*n + 2(a|S| - b|E(S)|)``, so a cut below ``b*m*n`` exposes ``S``.
    """
    a, b = guess.numerator, guess.denominator
    n, m = g.n, g.m
    s, t = n, n + 1
    net = _Dinic(n + 2)
    for v in range(n):
        net.add_edge(s, v, b * m)
        net.add_edge(v, t, b * m + 2 * a - b * len(g.adjacency[v]))
    for u, v in g.edges():
        net.add_edge(u, v, b, b)
    cut = net.max_flow(s, t)
    if cut >= b * m * n:
        return None
    side = net.source_side(s)
    side.discard(s)
    return sorted(side)


def densest_subgraph(g: Graph) -> DensestResult:
    """Exact densest induced subgraph with a witness vertex set.

    Bisection keeps ``lo`` equal to the density of a known witness and
    ``hi`` an upper bound. Densities are fractions with denominator at most
    ``n``, and two distinct ones differ by at least ``1/n^2``, so once
    ``hi - lo < 1/n^2`` the witness is optimal.
    """
    if g.n == 0:
        raise ValueError("densest subgraph of the empty graph is undefined")
    witness = list(range(g.n))
    lo = Fraction(g.m, g.n)
    if g.m == 0:
        return DensestResult(lo, (0,))
    hi = min(Fraction(g.n - 1, 2), Fraction(g.max_degree(), 2))
    gap = Fraction(1, g.n * g.n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        found = _denser_than(g, mid)
        if found is None:
            hi = mid
        else:
            witness = found
            lo = density(g, found)
    return DensestResult(lo, tuple(witness))


def mad(g: Graph) -> Fraction:
    return 2 * densest_subgraph(g).density


def mad_brute(g: Graph) -> Fraction:
    """Maximum average degree by enumerating every nonempty vertex subset."""
    n = g.n
    if n == 0:
        raise ValueError("mad of the empty graph is undefined")
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force capped at n={BRUTE_FORCE_CAP}, got {n}")
    adj = [sum(1 << u for u in g.adjacency[v]) for v in range(n)]
    edges = [0] * (1 << n)
    best = Fraction(0)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        edges[mask] = edges[rest] + (adj[low] & rest).bit_count()
        if edges[mask] * best.denominator > best.numerator * mask.bit_count():
            best = Fraction(edges[mask], mask.bit_count())
    return 2 * best


def girth_mad_bound(g: int) -> Fraction:
    """``2g/(g-2)``: a planar graph of girth ``g`` has mad strictly below it."""
    if g < 3:
        raise ValueError("girth must be at least 3")
    return Fraction(2 * g, g - 2)
