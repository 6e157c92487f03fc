"""Simple undirected graphs on dense integer vertex ids.

Graphs are immutable; every query is pure. Parsers and serializers cover
graph6 and a plain ``u v`` edge-list text format.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Raised when graph text cannot be parsed."""


class DuplicateEdgeWarning(UserWarning):
    """Emitted when an edge list repeats an edge; the copies are collapsed."""


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph.

    ``adjacency[v]`` is the strictly increasing tuple of neighbors of ``v``.
    Construction validates simplicity and symmetry.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    _edge_count: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if u <= prev:
                    raise ValueError(f"neighbors of {v} not strictly increasing")
                prev = u
            total += len(nbrs)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _contains(self.adjacency[u], v):
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        object.__setattr__(self, "_edge_count", total // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    # -- elementary queries -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._edge_count

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return _contains(self.adjacency[u], v)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max_degree of the empty graph is undefined")
        return max(len(a) for a in self.adjacency)

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min_degree of the empty graph is undefined")
        return min(len(a) for a in self.adjacency)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(_component(self, 0)) == self.n

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if not seen[s]:
                comp = _component(self, s)
                for v in comp:
                    seen[v] = True
                out.append(sorted(comp))
        return out

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for n={self.n}")


def _contains(row: tuple[int, ...], x: int) -> bool:
    # rows are short; linear scan beats bisect at these sizes
    return x in row


def _component(g: Graph, s: int) -> list[int]:
    seen = {s}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return list(seen)


# -- structural queries -----------------------------------------------------


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def max_degree(g: Graph) -> int:
    return g.max_degree()


def min_degree(g: Graph) -> int:
    return g.min_degree()


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, or ``math.inf`` for forests.

    Runs a BFS from every vertex; a non-tree edge ``(u, w)`` met during the
    search from ``r`` closes a closed walk of length ``d(u) + d(w) + 1``
    through ``r``, and the minimum over all roots is attained by a cycle.
    """
    best: float | int = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in g.adjacency[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``.

    Returns the new graph and the remap table ``ids`` with ``ids[new] = old``;
    new ids follow increasing old ids.
    """
    ids = sorted(set(vertices))
    for v in ids:
        g._check_vertex(v)
    index = {old: new for new, old in enumerate(ids)}
    rows = tuple(
        tuple(index[u] for u in g.adjacency[old] if u in index) for old in ids
    )
    return Graph(len(ids), rows), ids


def density(g: Graph, vertices: Iterable[int]):
    """Edge count over vertex count of the induced subgraph, as a Fraction."""
    from fractions import Fraction

    s = set(vertices)
    if not s:
        raise ValueError("density of an empty vertex set")
    e = sum(1 for v in s for u in g.adjacency[v] if u in s) // 2
    return Fraction(e, len(s))


# -- graph6 -----------------------------------------------------------------


def _encode_length(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    bits = []
    for j in range(1, g.n):
        row = g.adjacency[j]
        for i in range(j):
            bits.append(1 if i in row else 0)
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_length(g.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` header is accepted."""
    line = text.strip()
    offset = 0
    if line.startswith(">>graph6<<"):
        line = line[10:]
        offset = 10
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 byte {ch!r} at offset {offset + i}")
    if not line:
        raise GraphFormatError(f"missing graph6 length header at offset {offset}")
    vals = [ord(ch) - 63 for ch in line]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphFormatError(f"truncated graph6 length header at offset {offset}")
        n, pos = 0, 8
        for v in vals[2:8]:
            n = (n << 6) | v
    else:
        if len(vals) < 4:
            raise GraphFormatError(f"truncated graph6 length header at offset {offset}")
        n, pos = 0, 4
        for v in vals[1:4]:
            n = (n << 6) | v
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {need} at offset {offset + pos}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise GraphFormatError(
            f"nonzero padding bits at offset {offset + pos + len(body) - 1}"
        )
    return Graph.from_edges(n, edges)


# -- edge lists -------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; an optional first ``n <count>`` line fixes the size.

    Blank lines and ``#`` comments are ignored. Repeated edges collapse and
    raise a :class:`DuplicateEdgeWarning`.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    dupes = 0
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if first and tokens[0] == "n":
            first = False
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'n <count>'")
            declared = _nonneg(tokens[1], lineno)
            continue
        first = False
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected two vertex ids")
        u, v = _nonneg(tokens[0], lineno), _nonneg(tokens[1], lineno)
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop {u} {v}")
        key = (min(u, v), max(u, v))
        if key in seen:
            dupes += 1
            continue
        seen.add(key)
        edges.append(key)
    top = max((v for e in edges for v in e), default=-1) + 1
    if declared is None:
        n = top
    elif top > declared:
        raise GraphFormatError(f"vertex id {top - 1} exceeds declared n={declared}")
    else:
        n = declared
    if dupes:
        warnings.warn(f"collapsed {dupes} duplicate edge(s)", DuplicateEdgeWarning, stacklevel=2)
    return Graph.from_edges(n, edges)


def _nonneg(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise GraphFormatError(f"line {lineno}: invalid vertex id {tok!r}")
    return int(tok)


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph with vertex ``order[i]`` renamed to ``i``."""
    pos = {old: new for new, old in enumerate(order)}
    return Graph.from_edges(g.n, ((pos[u], pos[v]) for u, v in g.edges()))
