"""Detectors for the reducible configurations C1-C5.

Part ``p`` of the theorem is the mad class (1: below 12/5, 2: below 8/3,
3: below 3). Each kind is usable only under its own (p, k) condition; see
:func:`applicable`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph

KINDS = ("C1", "C2", "C3", "C4", "C5")

# bound-vertex roles per kind, in serialization order
ROLES = {
    "C1": ("v", "u"),
    "C2": ("v", "u", "w"),
    "C3": ("v", "u", "w"),
    "C4": ("v", "x", "y", "z", "w", "x_", "y_", "z_"),
    "C5": ("v", "x1", "x2", "x3", "x4", "x5", "x1_", "x2_", "x3_", "x4_", "x5_"),
}


@dataclass(frozen=True)
class Configuration:
    """A matched configuration.

    ``bindings`` maps role names to vertex ids. Primed roles carry a
    trailing underscore (``x_`` is the other neighbour of ``x``). In C1 the
    neighbour ``u`` is None when ``v`` is isolated.
    """

    kind: str
    bindings: dict

    def __getitem__(self, role: str) -> Optional[int]:
        return self.bindings[role]

    @property
    def anchor(self) -> int:
        return self.bindings["v"]

    def to_dict(self) -> dict:
        return {"kind": self.kind, **{r: self.bindings[r] for r in ROLES[self.kind]}}

    @classmethod
    def from_dict(cls, data: dict) -> "Configuration":
        kind = data["kind"]
        if kind not in ROLES:
            raise ValueError(f"unknown configuration kind {kind!r}")
        return cls(kind, {r: data[r] for r in ROLES[kind]})


def applicable(kind: str, p: int, k: int) -> bool:
    """Whether ``kind`` may be used in part ``p`` with threshold ``k``."""
    if kind == "C1":
        return k >= 2
    if kind == "C2":
        return k >= p + 1
    if kind == "C3":
        return k >= max(p + 2, 4)
    if kind == "C4":
        return k >= 3 and p >= 3
    if kind == "C5":
        return k >= 4 and p >= 3
    raise ValueError(f"unknown configuration kind {kind!r}")


def deletion_set(cfg: Configuration) -> tuple[int, ...]:
    """Vertices removed before coloring the rest; C5 keeps ``x5`` colored."""
    b = cfg.bindings
    if cfg.kind in ("C1", "C2", "C3"):
        return (b["v"],)
    if cfg.kind == "C4":
        return (b["v"], b["x"], b["y"], b["z"])
    return (b["v"], b["x1"], b["x2"], b["x3"], b["x4"])


def _other(g: Graph, x: int, v: int) -> int:
    a, b = g.adjacency[x]
    return b if a == v else a


def _c1(g: Graph, p: int) -> Optional[Configuration]:
    for v in range(g.n):
        d = len(g.adjacency[v])
        if d <= 1:
            return Configuration("C1", {"v": v, "u": g.adjacency[v][0] if d else None})
    return None


def _c2(g: Graph, p: int) -> Optional[Configuration]:
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] != 2:
            continue
        a, b = g.adjacency[v]
        if deg[a] <= p:
            return Configuration("C2", {"v": v, "u": a, "w": b})
        if deg[b] <= p:
            return Configuration("C2", {"v": v, "u": b, "w": a})
    return None


def _c3(g: Graph, p: int) -> Optional[Configuration]:
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] != 2:
            continue
        a, b = g.adjacency[v]
        if deg[a] <= p + 1 and deg[b] <= 2 * p + 1:
            return Configuration("C3", {"v": v, "u": a, "w": b})
        if deg[b] <= p + 1 and deg[a] <= 2 * p + 1:
            return Configuration("C3", {"v": v, "u": b, "w": a})
    return None


def _c4(g: Graph, p: int) -> Optional[Configuration]:
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] != 4:
            continue
        twos = [u for u in g.adjacency[v] if deg[u] == 2]
        if len(twos) < 3:
            continue
        x, y, z = twos[:3]
        (w,) = [u for u in g.adjacency[v] if u not in (x, y, z)]
        deleted = {v, x, y, z}
        outer = [_other(g, t, v) for t in (x, y, z)]
        if any(o in deleted for o in outer):
            continue
        return Configuration("C4", {"v": v, "x": x, "y": y, "z": z, "w": w,
                                    "x_": outer[0], "y_": outer[1], "z_": outer[2]})
    return None


def _c5(g: Graph, p: int) -> Optional[Configuration]:
    deg = g.degrees()
    for v in range(g.n):
        if deg[v] != 5:
            continue
        xs = g.adjacency[v]
        if any(deg[x] != 2 for x in xs):
            continue
        deleted = {v, *xs[:4]}
        outer = [_other(g, x, v) for x in xs]
        if any(o in deleted for o in outer):
            continue
        b = {"v": v}
        for i, (x, o) in enumerate(zip(xs, outer), 1):
            b[f"x{i}"] = x
            b[f"x{i}_"] = o
        return Configuration("C5", b)
    return None


_DETECTORS = {"C1": _c1, "C2": _c2, "C3": _c3, "C4": _c4, "C5": _c5}


def find_configuration(g: Graph, p: int, k: int) -> Optional[Configuration]:
    """First applicable configuration, scanning C1..C5 then anchor id.

    C1 also matches isolated vertices. C4 binds the three smallest
    2-neighbours of its 4-vertex. C4/C5 matches whose outside neighbours
    fall in the deletion set are skipped.
    """
    if p not in (1, 2, 3):
        raise ValueError(f"p must be 1, 2 or 3, got {p}")
    for kind in KINDS:
        if applicable(kind, p, k):
            found = _DETECTORS[kind](g, p)
            if found is not None:
                return found
    return None


def check_configuration(g: Graph, cfg: Configuration, p: int) -> bool:
    """Re-check a configuration's degree constraints against ``g``."""
    b = cfg.bindings
    deg = g.degree
    v = b["v"]
    try:
        if cfg.kind == "C1":
            u = b["u"]
            return deg(v) == 0 if u is None else (deg(v) == 1 and g.has_edge(u, v))
        if cfg.kind in ("C2", "C3"):
            u, w = b["u"], b["w"]
            if deg(v) != 2 or set(g.neighbors(v)) != {u, w}:
                return False
            if cfg.kind == "C2":
                return deg(u) <= p
            return deg(u) <= p + 1 and deg(w) <= 2 * p + 1
        if cfg.kind == "C4":
            xs = (b["x"], b["y"], b["z"])
            outer = (b["x_"], b["y_"], b["z_"])
            if deg(v) != 4 or set(g.neighbors(v)) != {*xs, b["w"]} or len(set(xs)) != 3:
                return False
        else:
            xs = tuple(b[f"x{i}"] for i in range(1, 6))
            outer = tuple(b[f"x{i}_"] for i in range(1, 6))
            if deg(v) != 5 or set(g.neighbors(v)) != set(xs):
                return False
        for x, o in zip(xs, outer):
            if deg(x) != 2 or set(g.neighbors(x)) != {v, o}:
                return False
        return not set(outer) & set(deletion_set(cfg))
    except (IndexError, KeyError):
        return False
