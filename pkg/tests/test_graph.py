import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewspec.errors import (
    Graph6CharacterError,
    Graph6Error,
    Graph6HeaderError,
    Graph6LengthError,
    GraphError,
)
from skewspec.graph import (
    Cycle,
    Graph,
    delete_edge,
    delete_vertices,
    enumerate_cycles,
    format_edge_list,
    generate,
    is_bipartite,
    is_connected,
    is_odd_cycle_graph,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)

from oracles import DATA, brute_cycles, load_catalog


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_canonical_edge_order_is_input_independent():
    a = Graph.from_edges(4, [(3, 2), (0, 1), (1, 2)])
    b = Graph.from_edges(4, [(1, 2), (2, 3), (1, 0)])
    assert a == b
    assert a.edges == ((0, 1), (1, 2), (2, 3))
    assert hash(a) == hash(b)


@pytest.mark.parametrize("bad", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_invalid_edges_rejected(bad):
    with pytest.raises(GraphError):
        Graph.from_edges(3, bad)


def test_direct_constructor_enforces_invariants():
    with pytest.raises(GraphError):
        Graph(3, ((1, 2), (0, 1)))
    with pytest.raises(GraphError):
        Graph(3, ((1, 0),))


def test_generate_examples():
    t = generate("theorem1", [2])
    assert (t.n, t.m) == (7, 8)
    assert generate("path", [1]) == Graph(1, ())
    kb = generate("complete_bipartite", [3, 4])
    assert (kb.n, kb.m) == (7, 12)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_theorem1_family_shape(m):
    g = generate("theorem1", [m])
    assert g.n == 4 * m - 1 and g.m == 4 * m
    assert g.degree(0) == 4
    assert all(g.degree(v) == 2 for v in range(1, g.n))
    cycles = enumerate_cycles(g)
    assert [c.length for c in cycles] == [2 * m, 2 * m]


@pytest.mark.parametrize(
    "family,params",
    [("cycle", [2]), ("path", [0]), ("theorem1", [1]), ("bowtie_odd", [4]),
     ("complete_bipartite", [0, 3]), ("nope", [1]), ("cycle", [3, 4])],
)
def test_generate_rejects_bad_parameters(family, params):
    with pytest.raises(GraphError):
        generate(family, params)


def test_bowtie_odd():
    g = generate("bowtie_odd", [3])
    assert (g.n, g.m) == (5, 6)
    assert [c.vertices for c in enumerate_cycles(g)] == [(0, 1, 2), (0, 3, 4)]


def test_cycle_enumeration_examples():
    assert enumerate_cycles(generate("path", [5])) == []
    (c,) = enumerate_cycles(generate("cycle", [4]))
    assert c.vertices == (0, 1, 2, 3)


def test_cycle_canonical_form():
    assert Cycle.canonical([2, 1, 0, 3]).vertices == (0, 1, 2, 3)
    assert Cycle.canonical([3, 0, 1, 2]).vertices == (0, 1, 2, 3)
    with pytest.raises(GraphError):
        Cycle((1, 0, 2))


def test_cycles_match_brute_force_on_catalog_n6():
    for g in load_catalog(6):
        got = enumerate_cycles(g)
        assert len(set(got)) == len(got)
        assert {frozenset(c.edges()) for c in got} == brute_cycles(g)
        assert got == sorted(got, key=lambda c: (c.length, c.vertices))


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_cycles_are_valid_and_canonical(g):
    for c in enumerate_cycles(g):
        assert Cycle.canonical(c.vertices) == c
        assert all(g.has_edge(a, b) for a, b in c.arcs())


@given(graphs())
@settings(max_examples=150, deadline=None)
def test_predicates_agree_with_cycle_list(g):
    cycles = enumerate_cycles(g)
    assert is_odd_cycle_graph(g) == all(c.length % 2 for c in cycles)
    assert (is_bipartite(g) is not None) == all(c.length % 2 == 0 for c in cycles)
    ref = nx.empty_graph(g.n)
    ref.add_edges_from(g.edges)
    assert is_connected(g) == nx.is_connected(ref)


def test_odd_cycle_graph_examples():
    assert is_odd_cycle_graph(generate("path", [6]))
    assert is_odd_cycle_graph(generate("bowtie_odd", [3]))
    assert not is_odd_cycle_graph(generate("theorem1", [2]))


def test_bipartite_examples():
    assert is_bipartite(generate("cycle", [4])) == ((0, 2), (1, 3))
    assert is_bipartite(generate("cycle", [3])) is None
    first, second = is_bipartite(generate("complete_bipartite", [3, 4]))
    assert (len(first), len(second)) == (3, 4)


def test_bipartite_smallest_vertex_first_per_component():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert is_bipartite(g) == ((0, 2), (1, 3))


def test_connectivity_examples():
    assert is_connected(generate("path", [3]))
    assert not is_connected(Graph(2, ()))
    assert is_connected(generate("theorem1", [3]))


def test_deletions():
    c4 = generate("cycle", [4])
    assert delete_edge(c4, (0, 1)) == Graph.from_edges(4, [(1, 2), (2, 3), (0, 3)])
    assert delete_edge(c4, (1, 0)).m == 3
    assert delete_vertices(c4, {0}) == generate("path", [3])
    assert delete_vertices(c4, set()) is c4
    with pytest.raises(GraphError):
        delete_edge(c4, (0, 2))
    with pytest.raises(GraphError):
        delete_vertices(c4, {7})


def test_delete_vertices_keeps_relative_order():
    g = Graph.from_edges(5, [(0, 4), (1, 3), (2, 4)])
    assert delete_vertices(g, {1}) == Graph.from_edges(4, [(0, 3), (1, 3)])


def test_graph6_c4_matches_reference_encoder():
    assert to_graph6(generate("cycle", [4])) == "Cl"
    assert nx.to_graph6_bytes(nx.cycle_graph(4), header=False).strip() == b"Cl"


def test_graph6_against_networkx_on_catalog():
    for line in (DATA / "connected_le7.g6").read_text().split():
        g = parse_graph6(line)
        assert to_graph6(g) == line
        ref = nx.from_graph6_bytes(line.encode())
        assert sorted(map(tuple, map(sorted, ref.edges()))) == list(g.edges)


@pytest.mark.parametrize("family,params", [
    ("path", [n]) for n in (1, 2, 7, 30)] + [
    ("cycle", [n]) for n in (3, 4, 17, 30)] + [
    ("complete_bipartite", [3, 4]), ("complete_bipartite", [1, 29]),
    ("theorem1", [2]), ("theorem1", [7]), ("bowtie_odd", [3]), ("bowtie_odd", [15])])
def test_graph6_round_trip_families(family, params):
    g = generate(family, params)
    assert parse_graph6(to_graph6(g)) == g


@given(graphs(max_n=12))
@settings(max_examples=200, deadline=None)
def test_graph6_round_trip_random(g):
    assert parse_graph6(to_graph6(g) + "\n") == g


@pytest.mark.parametrize("text,exc", [
    ("C\x01", Graph6CharacterError),
    ("C\x7f", Graph6CharacterError),
    ("", Graph6HeaderError),
    ("~??", Graph6HeaderError),
    ("C", Graph6LengthError),
    ("Cll", Graph6LengthError),
    ("B@", Graph6LengthError),  # n=3: low padding bit set
])
def test_graph6_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_graph6(text)
    assert issubclass(exc, Graph6Error)


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<Cl") == generate("cycle", [4])


def test_edge_list_round_trip():
    g = generate("theorem1", [2])
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("3 2\n0 1\n1 2\n") == generate("path", [3])
    with pytest.raises(GraphError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(GraphError):
        parse_edge_list("3 1\n0 x\n")
