"""Edge-degree constrained subgraphs: parameters, verification, construction, quality."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .graph import Edge, Graph
from .matching import maximum_matching

Number = Union[int, float, str, Fraction]


def as_fraction(x: Number) -> Fraction:
    """Exact value of a decimal given as str/float/int/Fraction (floats go through repr)."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


@dataclass(frozen=True)
class EdcsParams:
    beta: int
    beta_minus: int

    def __post_init__(self) -> None:
        if not self.beta > self.beta_minus >= 1:
            raise ValueError(f"need beta > beta_minus >= 1, got ({self.beta}, {self.beta_minus})")

    def meets_theorem(self, epsilon: Number) -> bool:
        """Whether (beta, beta_minus) satisfy the 2/3 - eps guarantee's hypotheses."""
        eps = as_fraction(epsilon)
        return 0 < eps <= 1 and self.beta * eps >= 50 and self.beta_minus >= (1 - eps / 10) * self.beta

    def max_fix_steps(self, n: int) -> int:
        return (2 * self.beta - 1) * n * self.beta // 2


def params_for_epsilon(epsilon: Number) -> EdcsParams:
    eps = as_fraction(epsilon)
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {epsilon}")
    beta = math.ceil(50 / eps)
    beta_minus = math.ceil((1 - eps / 10) * beta)
    if beta_minus >= beta:
        raise ValueError(f"epsilon {epsilon} gives beta_minus >= beta")
    return EdcsParams(beta, beta_minus)


@dataclass
class EdcsCheck:
    # (edge, deg_H(edge)) pairs
    p1_violations: list[tuple[Edge, int]] = field(default_factory=list)
    p2_violations: list[tuple[Edge, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.p1_violations and not self.p2_violations


def verify_edcs(g: Graph, h: Graph, p: EdcsParams) -> EdcsCheck:
    if not h.is_subgraph_of(g):
        raise ValueError("h is not a subgraph of g")
    deg = h.degrees()
    check = EdcsCheck()
    for u, v in g.sorted_edges:
        d = deg[u] + deg[v]
        if (u, v) in h.edges:
            if d > p.beta:
                check.p1_violations.append(((u, v), d))
        elif d < p.beta_minus:
            check.p2_violations.append(((u, v), d))
    return check


class FixBoundExceeded(RuntimeError):
    pass


@dataclass
class Construction:
    h: Graph
    steps: int
    potential: int


def construct_edcs_traced(g: Graph, p: EdcsParams, seed: int = 0) -> Construction:
    """Local fixing from H = ∅: repeatedly pick a violating edge uniformly at
    random (seeded) and delete it (P1) or insert it (P2).

    Tracks Φ(H) = Σ_v [(2β − 1)·d_v − 2·d_v²], which grows by at least 2 per
    fix, and fails loudly if the step count passes (2β − 1)nβ/2.
    """
    rng = random.Random(seed)
    beta, beta_minus = p.beta, p.beta_minus
    edges = g.sorted_edges
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    deg = [0] * g.n
    in_h = bytearray(len(edges))
    viol: list[int] = []
    pos = [-1] * len(edges)

    def refresh(i: int) -> None:
        d = deg[eu[i]] + deg[ev[i]]
        bad = d > beta if in_h[i] else d < beta_minus
        if bad and pos[i] < 0:
            pos[i] = len(viol)
            viol.append(i)
        elif not bad and pos[i] >= 0:
            j = viol.pop()
            if j != i:
                viol[pos[i]] = j
                pos[j] = pos[i]
            pos[i] = -1

    for i in range(len(edges)):
        refresh(i)
    limit = p.max_fix_steps(g.n)
    steps = phi = 0
    while viol:
        i = viol[rng.randrange(len(viol))]
        u, v = eu[i], ev[i]
        du, dv = deg[u], deg[v]
        if in_h[i]:
            in_h[i] = 0
            deg[u] -= 1
            deg[v] -= 1
            delta = 4 * (du + dv - beta) - 2
        else:
            in_h[i] = 1
            deg[u] += 1
            deg[v] += 1
            delta = 4 * (beta - du - dv) - 6
        assert delta >= 2, "potential must rise by at least 2 per fix"
        phi += delta
        steps += 1
        if steps > limit:
            raise FixBoundExceeded(f"{steps} fixes exceed the bound {limit}")
        for j in incident[u]:
            refresh(j)
        for j in incident[v]:
            refresh(j)
    h = Graph(g.n, frozenset(edges[i] for i in range(len(edges)) if in_h[i]))
    return Construction(h, steps, phi)


def construct_edcs(g: Graph, p: EdcsParams, seed: int = 0) -> Graph:
    return construct_edcs_traced(g, p, seed).h


@dataclass(frozen=True)
class EdcsQuality:
    mu_h: int
    mu_g: int
    ratio: Fraction
    threshold: Fraction
    passed: bool


def edcs_quality(g: Graph, h: Graph, epsilon: Number) -> EdcsQuality:
    if not h.is_subgraph_of(g):
        raise ValueError("h is not a subgraph of g")
    mu_h = maximum_matching(h).size
    mu_g = maximum_matching(g).size
    ratio = Fraction(mu_h, mu_g) if mu_g else Fraction(1)
    threshold = Fraction(2, 3) - as_fraction(epsilon)
    return EdcsQuality(mu_h, mu_g, ratio, threshold, mu_h >= threshold * mu_g)
