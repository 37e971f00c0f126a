import random

import pytest
from hypothesis import given, settings

from edcslab.gallai_edmonds import SpecialVertexError, decompose, mark_specials, verify_ge_properties
from edcslab.graph import GeneratorConfig, Graph, generate
from edcslab.matching import Matching, maximum_matching

from .conftest import brute_d_set, graphs


def test_k3(k3):
    ge = decompose(k3)
    assert brute_d_set(k3) == {0, 1, 2}
    assert ge.d_set == {0, 1, 2} and not ge.a_set and not ge.c_set
    assert ge.d_components == ((0, 1, 2),)


def test_star(star3):
    ge = decompose(star3)
    assert brute_d_set(star3) == {1, 2, 3}
    assert ge.d_set == {1, 2, 3} and ge.a_set == {0} and not ge.c_set


def test_path_has_perfect_matching(p4):
    assert brute_d_set(p4) == set()
    ge = decompose(p4)
    assert not ge.d_set and not ge.a_set and ge.c_set == {0, 1, 2, 3}


def test_empty_graph():
    ge = decompose(Graph(3))
    assert ge.d_set == {0, 1, 2} and not ge.a_set and not ge.c_set
    assert ge.d_components == ((0,), (1,), (2,))


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_d_matches_vertex_deletion_oracle(g):
    assert decompose(g).d_set == brute_d_set(g)


def test_specials_star(star3):
    m = Matching.of([(0, 1)])
    ge = mark_specials(decompose(star3), star3, m)
    assert ge.specials == (1, 2, 3)


def test_specials_k3(k3):
    ge = mark_specials(decompose(k3), k3, Matching.of([(0, 1)]))
    assert ge.specials == (2,)


def test_specials_perfect():
    g = Graph.from_edges(2, [(0, 1)])
    ge = mark_specials(decompose(g), g, maximum_matching(g))
    assert ge.d_components == () and ge.specials == ()


def test_specials_reject_non_maximum(k3):
    with pytest.raises(SpecialVertexError):
        mark_specials(decompose(k3), k3, Matching.of([]))


def test_properties_examples(star3, k3):
    assert verify_ge_properties(decompose(star3), star3, Matching.of([(0, 1)])).ok
    assert verify_ge_properties(decompose(k3), k3, Matching.of([(0, 1)])).ok
    bad = verify_ge_properties(decompose(k3), k3, Matching.of([]))
    assert not bad.d_components_near_perfect and bad.c_matched_within_c and bad.a_matched_into_d


@pytest.mark.parametrize("seed", range(25))
def test_properties_random(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 60)
    g = generate(GeneratorConfig("gnm-random", n, m=rng.randint(0, min(2 * n, n * (n - 1) // 2)), seed=seed))
    ge = decompose(g)
    for s in range(20):
        m = maximum_matching(g, seed=s)
        assert verify_ge_properties(ge, g, m).ok
        marked = mark_specials(ge, g, m)
        assert len(marked.specials) == len(ge.d_components)
    assert all(len(c) % 2 == 1 for c in ge.d_components)
    # decomposition does not depend on which maximum matching seeded it
    assert decompose(g, maximum_matching(g, seed=99)) == ge
