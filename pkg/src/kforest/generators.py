"""Named graph families used to build test corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .graph import Graph

FAMILIES = (
    "cycle",
    "path",
    "star",
    "complete",
    "complete_bipartite",
    "petersen",
    "random_tree",
    "subdivision",
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family with its size parameters.

    ``subdivide`` replaces every edge of the generated graph by a path with
    that many internal vertices. The ``subdivision`` family subdivides
    ``base``.
    """

    family: str
    sizes: tuple[int, ...] = ()
    seed: Optional[int] = None
    subdivide: int = 0
    base: Optional["FamilySpec"] = None


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with center 0."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Pruefer sequence."""
    if n < 1:
        raise ValueError("tree needs n >= 1")
    if n == 1:
        return Graph.empty(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if deg[v] == 1)
        edges.append((leaf, x))
        deg[leaf] -= 1
        deg[x] -= 1
    u, v = (w for w in range(n) if deg[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def subdivision(g: Graph, t: int) -> Graph:
    """Replace every edge of ``g`` by a path with ``t`` internal vertices.

    Original vertices keep their ids; new vertices follow, edge by edge.
    """
    if t < 0:
        raise ValueError("subdivision count must be >= 0")
    if t == 0:
        return g
    edges = []
    nxt = g.n
    for u, v in g.edges():
        chain = [u] + list(range(nxt, nxt + t)) + [v]
        nxt += t
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(nxt, edges)


def generate(spec: FamilySpec) -> Graph:
    fam, sizes = spec.family, spec.sizes

    def need(k: int) -> None:
        if len(sizes) != k:
            raise ValueError(f"{fam} takes {k} size parameter(s), got {len(sizes)}")
        if any(s < 1 for s in sizes):
            raise ValueError(f"{fam} sizes must be positive")

    if fam == "cycle":
        need(1)
        g = cycle(sizes[0])
    elif fam == "path":
        need(1)
        g = path(sizes[0])
    elif fam == "star":
        need(1)
        g = star(sizes[0])
    elif fam == "complete":
        need(1)
        g = complete(sizes[0])
    elif fam == "complete_bipartite":
        need(2)
        g = complete_bipartite(*sizes)
    elif fam == "petersen":
        need(0)
        g = petersen()
    elif fam == "random_tree":
        need(1)
        g = random_tree(sizes[0], spec.seed)
    elif fam == "subdivision":
        if spec.base is None:
            raise ValueError("subdivision needs a base family")
        return subdivision(generate(spec.base), spec.subdivide)
    else:
        raise ValueError(f"unknown family {fam!r}")
    return subdivision(g, spec.subdivide)
