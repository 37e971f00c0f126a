"""One-way protocol: Alice sends an EDCS of her edges, Bob matches on message ∪ his edges.

This is the plain "ship an EDCS" variant, without any subsampling step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .edcs import Number, as_fraction, construct_edcs, params_for_epsilon
from .graph import Edge, Graph
from .matching import maximum_matching

Mode = Literal["random", "adversarial-bipartition"]

DEFAULT_OVERLAP = 0.05


@dataclass(frozen=True)
class CommInstance:
    g: Graph
    alice_edges: frozenset[Edge]
    bob_edges: frozenset[Edge]
    epsilon: Fraction
    seed: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "epsilon", as_fraction(self.epsilon))
        if (self.alice_edges | self.bob_edges) != self.g.edges:
            raise ValueError("alice and bob edges must together cover exactly E(G)")


@dataclass(frozen=True)
class CommResult:
    message_edge_count: int
    mu_output: int
    mu_g: int
    ratio: Fraction
    threshold: Fraction
    beta: int

    @property
    def passed(self) -> bool:
        return self.ratio >= self.threshold

    def line(self) -> str:
        return (
            f"message_edges={self.message_edge_count} mu_out={self.mu_output} mu_g={self.mu_g} "
            f"ratio={_fmt(self.ratio)} threshold={_fmt(self.threshold)} {'PASS' if self.passed else 'FAIL'}"
        )


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def split_edges(
    g: Graph,
    mode: Mode = "random",
    seed: int = 0,
    epsilon: Number = Fraction(1, 2),
    overlap: float = DEFAULT_OVERLAP,
) -> CommInstance:
    """Distribute E(G) between Alice and Bob.

    random: each edge goes to both players with probability ``overlap``,
    otherwise to Alice or Bob with equal odds.

    adversarial-bipartition: Bob gets the fringe, every edge touching a
    pendant vertex (in the planted-tight family: both end edges of each
    3-path); Alice keeps the core. Graphs without pendant vertices use a
    seeded half of the vertices as the fringe.
    """
    rng = random.Random(seed)
    alice: set[Edge] = set()
    bob: set[Edge] = set()
    if mode == "random":
        for e in g.sorted_edges:
            r = rng.random()
            if r < overlap:
                alice.add(e)
                bob.add(e)
            elif r < overlap + (1 - overlap) / 2:
                alice.add(e)
            else:
                bob.add(e)
    elif mode == "adversarial-bipartition":
        fringe = {v for v in range(g.n) if g.degree(v) == 1}
        if not fringe:
            order = list(range(g.n))
            rng.shuffle(order)
            fringe = set(order[: g.n // 2])
        for e in g.sorted_edges:
            (bob if e[0] in fringe or e[1] in fringe else alice).add(e)
    else:
        raise ValueError(f"unknown split mode {mode!r}")
    return CommInstance(g, frozenset(alice), frozenset(bob), as_fraction(epsilon), seed)


def run_protocol(inst: CommInstance) -> CommResult:
    params = params_for_epsilon(inst.epsilon)
    g = inst.g
    message = construct_edcs(Graph(g.n, inst.alice_edges), params, inst.seed)
    bob_view = Graph(g.n, message.edges | inst.bob_edges)
    mu_out = maximum_matching(bob_view).size
    mu_g = maximum_matching(g).size
    ratio = Fraction(mu_out, mu_g) if mu_g else Fraction(1)
    return CommResult(message.m, mu_out, mu_g, ratio, Fraction(2, 3) - inst.epsilon, params.beta)
