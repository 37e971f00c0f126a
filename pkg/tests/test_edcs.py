import random
from fractions import Fraction

import pytest
import sympy as sp

from edcslab.edcs import (
    EdcsParams,
    FixBoundExceeded,
    construct_edcs,
    construct_edcs_traced,
    edcs_quality,
    params_for_epsilon,
    verify_edcs,
)
from edcslab.graph import GeneratorConfig, Graph, generate
from edcslab.matching import is_maximal, Matching


@pytest.mark.parametrize("eps, expected", [(1, (50, 45)), ("0.5", (100, 95)), (0.1, (500, 495)), ("0.2", (250, 245))])
def test_params_for_epsilon(eps, expected):
    p = params_for_epsilon(eps)
    assert (p.beta, p.beta_minus) == expected
    assert p.meets_theorem(eps)


@pytest.mark.parametrize("eps", [0, -0.1, 1.5])
def test_params_reject(eps):
    with pytest.raises(ValueError):
        params_for_epsilon(eps)


def test_params_invariant():
    with pytest.raises(ValueError):
        EdcsParams(3, 3)
    with pytest.raises(ValueError):
        EdcsParams(2, 0)


def test_verify_examples(p4, k3):
    assert verify_edcs(p4, p4.subgraph([(1, 2)]), EdcsParams(2, 1)).ok
    empty = verify_edcs(p4, Graph(4), EdcsParams(2, 1))
    assert [e for e, _ in empty.p2_violations] == [(0, 1), (1, 2), (2, 3)]
    assert all(d == 0 for _, d in empty.p2_violations)
    full = verify_edcs(k3, k3, EdcsParams(2, 1))
    assert len(full.p1_violations) == 3 and all(d == 4 for _, d in full.p1_violations)
    with pytest.raises(ValueError):
        verify_edcs(p4, Graph.from_edges(4, [(0, 3)]), EdcsParams(2, 1))


@pytest.mark.parametrize("seed", range(10))
def test_two_one_edcs_is_maximal_matching(p4, seed):
    h = construct_edcs(p4, EdcsParams(2, 1), seed)
    m = Matching(h.edges)
    assert is_maximal(p4, m)


def test_vacuous_constraints_keep_everything():
    g = generate(GeneratorConfig("gnm-random", 12, m=20, seed=1))
    beta = max(g.degree(u) + g.degree(v) for u, v in g.edges)
    h = construct_edcs(g, EdcsParams(beta, 1))
    assert verify_edcs(g, g, EdcsParams(beta, 1)).ok
    assert verify_edcs(g, h, EdcsParams(beta, 1)).ok


def test_random_construct():
    g = generate(GeneratorConfig("gnm-random", 30, m=200, seed=5))
    p = EdcsParams(10, 9)
    h = construct_edcs(g, p, seed=5)
    assert verify_edcs(g, h, p).ok
    assert construct_edcs(g, p, seed=5) == h


def test_empty_graph():
    assert construct_edcs(Graph(5), EdcsParams(4, 3)).m == 0


def potential(h: Graph, beta: int) -> int:
    return sum((2 * beta - 1) * d - 2 * d * d for d in h.degrees())


def test_potential_increments_symbolically():
    beta, du, dv = sp.symbols("beta d_u d_v", integer=True)
    phi = lambda a, b: (2 * beta - 1) * (a + b) - 2 * (a**2 + b**2)  # noqa: E731
    # other vertices are unaffected by a fix at (u, v)
    add = sp.expand(phi(du + 1, dv + 1) - phi(du, dv))
    remove = sp.expand(phi(du - 1, dv - 1) - phi(du, dv))
    assert sp.simplify(add - (4 * (beta - du - dv) - 6)) == 0
    assert sp.simplify(remove - (4 * (du + dv - beta) - 2)) == 0
    # insertion requires du + dv <= beta_minus - 1 <= beta - 2; deletion du + dv >= beta + 1
    assert sp.expand(add.subs(du, beta - 2 - dv)) == 2
    assert sp.expand(remove.subs(du, beta + 1 - dv)) == 2
    # Φ per vertex peaks at (2β − 1)²/8, below (2β − 1)β
    d = sp.symbols("d", real=True)
    peak = sp.maximum((2 * 7 - 1) * d - 2 * d**2, d, sp.Interval(0, sp.oo))
    assert peak == sp.Rational(13**2, 8)


@pytest.mark.parametrize("seed", range(30))
def test_potential_tracking(seed):
    rng = random.Random(seed)
    n = rng.randint(5, 40)
    g = generate(GeneratorConfig("gnm-random", n, p=rng.uniform(0.1, 0.9), seed=seed))
    beta = rng.randint(2, 12)
    p = EdcsParams(beta, rng.randint(1, beta - 1))
    c = construct_edcs_traced(g, p, seed)
    assert verify_edcs(g, c.h, p).ok
    assert c.potential == potential(c.h, beta)
    assert c.potential >= 2 * c.steps
    assert c.steps <= p.max_fix_steps(n)
    assert max(c.h.degrees(), default=0) <= beta
    assert c.h.m <= n * beta / 2


def test_fix_bound_is_enforced(monkeypatch):
    g = generate(GeneratorConfig("complete", 8))
    monkeypatch.setattr(EdcsParams, "max_fix_steps", lambda self, n: 3)
    with pytest.raises(FixBoundExceeded):
        construct_edcs(g, EdcsParams(4, 3))


def test_quality_examples(p4):
    q = edcs_quality(p4, p4, 1)
    assert q.ratio == 1 and q.passed
    q = edcs_quality(p4, p4.subgraph([(1, 2)]), "0.1")
    assert q.ratio == Fraction(1, 2) and q.threshold == Fraction(17, 30)
    assert not q.passed


def test_quality_dense():
    g = generate(GeneratorConfig("gnm-random", 300, p=0.5, seed=0))
    p = params_for_epsilon("0.5")
    h = construct_edcs(g, p, 0)
    q = edcs_quality(g, h, "0.5")
    assert q.passed and q.threshold == Fraction(1, 6)
