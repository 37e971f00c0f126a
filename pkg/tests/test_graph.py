import pytest
from hypothesis import given

from edcslab.graph import (
    GeneratorConfig,
    Graph,
    GraphFormatError,
    connected_components,
    edge_degree,
    format_graph,
    generate,
    induced_subgraph,
    load_graph,
    parse_graph,
    save_graph,
)

from .conftest import graphs


def test_load_k3(tmp_path):
    f = tmp_path / "k3.graph"
    f.write_text("3 3\n0 1\n1 2\n0 2\n")
    g = load_graph(f)
    assert (g.n, g.m) == (3, 3)
    assert g.edges == {(0, 1), (1, 2), (0, 2)}


def test_load_path():
    g = parse_graph("4 3\n0 1\n1 2\n2 3\n")
    assert g.edges == {(0, 1), (1, 2), (2, 3)}


@pytest.mark.parametrize("text, line, what", [
    ("2 1\n0 0\n", 2, "self-loop"),
    ("3 2\n0 1\n1 0\n", 3, "duplicate"),
    ("3 1\n0 3\n", 2, "out of range"),
    ("3\n0 1\n", 1, "expected two integers"),
    ("x y\n", 1, "non-integer"),
    ("3 2\n0 1\n", 2, "announces 2"),
])
def test_load_errors_carry_line_numbers(text, line, what):
    with pytest.raises(GraphFormatError) as err:
        parse_graph(text)
    assert err.value.line == line
    assert what in str(err.value)


def test_comments_skipped():
    g = parse_graph("# triangle\n3 3\n# edges follow\n0 1\n1 2\n0 2\n")
    assert g.m == 3


def test_canonical_roundtrip(tmp_path):
    g = parse_graph("4 3\n2 3\n1 0\n2 1\n")
    f = tmp_path / "g.graph"
    save_graph(g, f)
    text = f.read_text()
    assert text == "4 3\n0 1\n1 2\n2 3\n"
    save_graph(load_graph(f), f)
    assert f.read_text() == text


@given(graphs(max_n=12))
def test_roundtrip_identity(g):
    text = format_graph(g)
    assert parse_graph(text) == g
    assert format_graph(parse_graph(text)) == text


@given(graphs(max_n=12))
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.m


@given(graphs(max_n=12))
def test_induced_on_everything_is_identity(g):
    assert induced_subgraph(g, range(g.n))[0] == g


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        Graph(2, frozenset({(0, 2)}))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_edge_degree(k3, p4, star3):
    assert edge_degree(k3, (0, 1)) == 4
    assert edge_degree(p4, (0, 1)) == 3
    assert edge_degree(star3, (0, 2)) == 4
    with pytest.raises(ValueError):
        edge_degree(p4, (0, 3))


def test_induced_subgraph_examples(k3, p4):
    sub, index = induced_subgraph(k3, {0, 1})
    assert sub.edges == {(0, 1)} and index == {0: 0, 1: 1}
    assert induced_subgraph(p4, {0, 2})[0].edges == frozenset()
    assert induced_subgraph(k3, {0, 1, 2})[0] == k3
    with pytest.raises(ValueError):
        induced_subgraph(k3, {5})


def test_generate_path_and_planted():
    assert generate(GeneratorConfig("path", 4)).edges == {(0, 1), (1, 2), (2, 3)}
    planted = generate(GeneratorConfig("planted-tight", 4))
    assert planted.edges == {(0, 1), (1, 2), (2, 3)}


def test_generate_deterministic():
    cfg = GeneratorConfig("gnm-random", 8, m=12, seed=7)
    a, b = generate(cfg), generate(cfg)
    assert a == b and a.m == 12
    assert generate(GeneratorConfig("gnm-random", 8, m=12, seed=8)) != a


@pytest.mark.parametrize("seed", range(5))
def test_bipartite_random_is_two_colourable(seed):
    g = generate(GeneratorConfig("bipartite-random", 15, p=0.4, seed=seed))
    colour = {}
    for comp in connected_components(g):
        colour[comp[0]] = 0
        stack = [comp[0]]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                assert colour[y] != colour[x]


def test_complete_and_star():
    assert generate(GeneratorConfig("complete", 5)).m == 10
    star = generate(GeneratorConfig("star", 5))
    assert star.degree(0) == 4 and star.m == 4


@pytest.mark.parametrize("kwargs", [
    dict(family="gnm-random", n=4, m=7),
    dict(family="gnm-random", n=4),
    dict(family="planted-tight", n=6),
    dict(family="nope", n=3),
    dict(family="gnm-random", n=4, m=2, seed=-1),
])
def test_generator_config_rejects(kwargs):
    with pytest.raises(ValueError):
        GeneratorConfig(**kwargs)
