import pytest

from edcslab.comm import CommInstance, run_protocol, split_edges
from edcslab.graph import GeneratorConfig, Graph, generate, planted_middle_edges


@pytest.fixture(scope="module")
def dense():
    return generate(GeneratorConfig("gnm-random", 120, p=0.5, seed=4))


def test_random_split_covers(dense):
    inst = split_edges(dense, "random", seed=3)
    assert inst.alice_edges | inst.bob_edges == dense.edges
    assert len(inst.alice_edges) + len(inst.bob_edges) >= dense.m
    assert inst.alice_edges & inst.bob_edges  # some overlap at the default rate


def test_split_deterministic(dense):
    assert split_edges(dense, "random", seed=9) == split_edges(dense, "random", seed=9)
    assert split_edges(dense, "adversarial-bipartition", seed=9) == split_edges(
        dense, "adversarial-bipartition", seed=9)


def test_adversarial_on_planted():
    g = generate(GeneratorConfig("planted-tight", 40))
    inst = split_edges(g, "adversarial-bipartition", seed=0)
    assert inst.alice_edges == frozenset(planted_middle_edges(40))
    assert inst.bob_edges == g.edges - inst.alice_edges


def test_instance_must_cover():
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        CommInstance(g, frozenset({(0, 1)}), frozenset(), 1, 0)


def test_bob_self_sufficient(dense):
    inst = CommInstance(dense, frozenset(), dense.edges, 1, 0)
    assert run_protocol(inst).ratio == 1


def test_alice_holds_everything(dense):
    res = run_protocol(CommInstance(dense, dense.edges, frozenset(), "0.5", 1))
    assert res.passed and res.message_edge_count <= 120 * res.beta // 2


@pytest.mark.parametrize("mode", ["random", "adversarial-bipartition"])
def test_protocol_bound(dense, mode):
    res = run_protocol(split_edges(dense, mode, seed=2, epsilon="0.5"))
    assert res.passed
    assert res.message_edge_count <= 50 * dense.n
    assert res == run_protocol(split_edges(dense, mode, seed=2, epsilon="0.5"))
    assert res.line().startswith("message_edges=")
