"""Vertex discharging with exact rational charges.

Every vertex starts with its degree as charge. A rule moves a fixed amount
across each edge from a giver whose degree lies in a range to a receiver of
one exact degree. Total charge is conserved, so if every final charge is
at least ``b`` then the average degree, and hence mad, is at least ``b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .coloring import BOUND_BY_PART
from .configurations import Configuration, find_configuration
from .graph import Graph


@dataclass(frozen=True)
class Rule:
    giver_lo: int
    giver_hi: Optional[int]  # None: unbounded
    receiver: int
    amount: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "amount", Fraction(self.amount))
        if self.amount <= 0:
            raise ValueError("rule amount must be positive")
        if self.giver_hi is not None and self.giver_lo > self.giver_hi:
            raise ValueError("giver degree range is empty")
        if self.receiver < 1:
            raise ValueError("receiver degree must be at least 1")

    def gives(self, giver_degree: int, receiver_degree: int) -> bool:
        return (receiver_degree == self.receiver and giver_degree >= self.giver_lo
                and (self.giver_hi is None or giver_degree <= self.giver_hi))


@dataclass(frozen=True)
class RuleSet:
    name: str
    rules: tuple[Rule, ...]
    bound: Fraction
    p: Optional[int] = None

    def __post_init__(self) -> None:
        for i, r in enumerate(self.rules):
            for s in self.rules[i + 1:]:
                if r.receiver != s.receiver:
                    continue
                hi_r = r.giver_hi if r.giver_hi is not None else float("inf")
                hi_s = s.giver_hi if s.giver_hi is not None else float("inf")
                if r.giver_lo <= hi_s and s.giver_lo <= hi_r:
                    raise ValueError(f"rules {r} and {s} overlap")

    def transfer(self, giver_degree: int, receiver_degree: int) -> Fraction:
        for r in self.rules:
            if r.gives(giver_degree, receiver_degree):
                return r.amount
        return Fraction(0)


R1 = RuleSet("R1", (
    Rule(3, 3, 2, Fraction(1, 5)),
    Rule(4, None, 2, Fraction(2, 5)),
), BOUND_BY_PART[1], 1)

R2 = RuleSet("R2", (
    Rule(3, 3, 2, Fraction(1, 9)),
    Rule(4, 5, 2, Fraction(1, 3)),
    Rule(6, None, 2, Fraction(5, 9)),
), BOUND_BY_PART[2], 2)

R3 = RuleSet("R3", (
    Rule(4, None, 2, Fraction(1, 2)),
), BOUND_BY_PART[3], 3)

RULESETS = {1: R1, 2: R2, 3: R3}


@dataclass
class ChargeState:
    initial: list[Fraction]
    final: list[Fraction]

    def to_dict(self) -> dict:
        return {"charges": [{"initial": frac_str(a), "final": frac_str(b)}
                            for a, b in zip(self.initial, self.final)]}

    @classmethod
    def from_dict(cls, data: dict) -> "ChargeState":
        rows = data["charges"]
        return cls([Fraction(r["initial"]) for r in rows],
                   [Fraction(r["final"]) for r in rows])


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def apply(g: Graph, rules: RuleSet) -> ChargeState:
    deg = g.degrees()
    initial = [Fraction(d) for d in deg]
    final = list(initial)
    for u, v in g.edges():
        for a, b in ((u, v), (v, u)):
            amt = rules.transfer(deg[a], deg[b])
            if amt:
                final[a] -= amt
                final[b] += amt
    return ChargeState(initial, final)


def min_final_charge(state: ChargeState) -> Fraction:
    if not state.final:
        raise ValueError("no vertices")
    return min(state.final)


@dataclass
class BoundReport:
    configuration: Optional[Configuration]
    min_charge: Optional[Fraction]
    bound: Fraction
    state: Optional[ChargeState] = field(default=None, repr=False)

    @property
    def consistent(self) -> bool:
        return self.configuration is not None or self.min_charge >= self.bound

    def to_dict(self) -> dict:
        return {
            "configs_found": [] if self.configuration is None else [self.configuration.to_dict()],
            "min_charge": None if self.min_charge is None else frac_str(self.min_charge),
            "bound": frac_str(self.bound),
            "consistent": self.consistent,
        }


def check_bound(g: Graph, p: int, k: int) -> BoundReport:
    """Either a reducible configuration, or final charges all at least the bound.

    A report with ``consistent == False`` would contradict the discharging
    argument for part ``p``.
    """
    if k < 4:
        raise ValueError("check_bound runs in theorem mode (k >= 4)")
    if g.n == 0:
        raise ValueError("empty graph")
    rules = RULESETS[p]
    cfg = find_configuration(g, p, k)
    if cfg is not None:
        return BoundReport(cfg, None, rules.bound)
    state = apply(g, rules)
    return BoundReport(None, min_final_charge(state), rules.bound, state)
