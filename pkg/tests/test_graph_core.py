import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sbcgraph import (BipartiteGraph, GraphError, Matching, SimpleGraph, brute_force_inm, complement,
                      connected_components, induced_subgraph, is_induced_matching, is_weakly_chordal,
                      max_independent_set, to_simple)
from sbcgraph.graph_core import adjacency, edge_vertices

from conftest import bipartite_graphs, simple_graphs


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(1, n)])


# --- oracles -----------------------------------------------------------------


def naive_inm(g):
    adj = adjacency(g)
    ends = [edge_vertices(g, e) for e in g.edges]
    best = 0
    for k in range(1, len(ends) + 1):
        found = False
        for combo in itertools.combinations(ends, k):
            used = [v for e in combo for v in e]
            if len(set(used)) != len(used):
                continue
            if all(not ({c, d} & (adj[a] | adj[b])) for (a, b), (c, d) in itertools.combinations(combo, 2)):
                found = True
                break
        if not found:
            break
        best = k
    return best


def subset_cycle_weakly_chordal(g: SimpleGraph) -> bool:
    """Every vertex subset of size >= 5 inducing a cycle, in g or its complement."""
    for h in (g, complement(g)):
        for k in range(5, h.n + 1):
            for sub in itertools.combinations(h.vertices, k):
                s = set(sub)
                deg = {v: sum(1 for u in s if h.has_edge(u, v)) for v in s}
                if all(d == 2 for d in deg.values()):
                    G = nx.Graph([e for e in h.edges if e[0] in s and e[1] in s])
                    if nx.is_connected(G):
                        return False
    return True


# --- construction ------------------------------------------------------------


def test_bipartite_normalises_and_rejects():
    g = BipartiteGraph.from_edges([2, 1], [5, 3], [(2, 5), (1, 3), (1, 5)])
    assert g.x_indices == (1, 2) and g.y_indices == (3, 5)
    assert g.edges == [(1, 3), (1, 5), (2, 5)]
    assert g.y_neighbors(5) == (1, 2)
    with pytest.raises(GraphError):
        BipartiteGraph.from_edges([1], [2], [(1, 3)])
    with pytest.raises(GraphError):
        BipartiteGraph.from_edges([1], [2], [(1, 2), (1, 2)])
    with pytest.raises(GraphError):
        BipartiteGraph.from_edges([1, 1], [2], [])


def test_simple_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(3, [(1, 2), (2, 1)])
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(3, [(1, 1)])
    with pytest.raises(GraphError):
        SimpleGraph.from_edges(3, [(1, 4)])


def test_induced_subgraph_keeps_labels():
    g = cycle(6)
    h = induced_subgraph(g, {2, 3, 4, 6})
    assert h.vertices == (2, 3, 4, 6)
    assert h.edges == frozenset({(2, 3), (3, 4)})
    with pytest.raises(GraphError):
        induced_subgraph(g, {7})
    b = BipartiteGraph.from_edges([1, 2], [3, 4], [(1, 3), (2, 3), (2, 4)])
    hb = induced_subgraph(b, {("x", 2), ("y", 4), ("y", 3)})
    assert hb.edges == [(2, 3), (2, 4)]


# --- matchings ---------------------------------------------------------------


def test_is_induced_matching_examples():
    p4 = path(4)
    assert is_induced_matching(p4, [(1, 2)])
    assert not is_induced_matching(p4, [(1, 2), (3, 4)])
    assert is_induced_matching(path(5), [(1, 2), (4, 5)])
    assert not is_induced_matching(path(3), [(1, 2), (2, 3)])
    with pytest.raises(GraphError):
        is_induced_matching(p4, [(1, 3)])
    assert is_induced_matching(p4, Matching())


@pytest.mark.parametrize("n,expected", [(3, 1), (4, 1), (5, 1), (6, 2), (7, 2), (9, 3)])
def test_inm_of_cycles(n, expected):
    assert brute_force_inm(cycle(n))[0] == expected


def test_inm_empty_graph():
    assert brute_force_inm(SimpleGraph(3)) == (0, Matching())


@settings(max_examples=150)
@given(simple_graphs(max_n=7))
def test_brute_inm_matches_naive(g):
    size, m = brute_force_inm(g)
    assert size == naive_inm(g) == len(m)
    assert is_induced_matching(g, m)


@settings(max_examples=80)
@given(bipartite_graphs(max_side=4))
def test_brute_inm_bipartite(g):
    size, m = brute_force_inm(g)
    assert size == naive_inm(g)
    assert is_induced_matching(g, m)


@settings(max_examples=150)
@given(st.integers(1, 11), st.data())
def test_max_independent_set_is_maximum(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    masks = [0] * n
    for a, b in chosen:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    got = max_independent_set(masks)
    assert all(not (masks[a] >> b) & 1 for a, b in itertools.combinations(got, 2))
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(chosen)
    clique = max(nx.find_cliques(nx.complement(G)), key=len)
    assert len(got) == len(clique)


# --- weakly chordal ----------------------------------------------------------


@pytest.mark.parametrize("n", [5, 6, 7])
def test_long_cycles_are_not_weakly_chordal(n):
    assert not is_weakly_chordal(cycle(n))
    assert not is_weakly_chordal(complement(cycle(n)))


def test_short_paths_and_cycles():
    assert is_weakly_chordal(cycle(4))
    assert is_weakly_chordal(path(6))
    assert is_weakly_chordal(SimpleGraph(1))
    # C6 as a bipartite graph
    b = BipartiteGraph.from_edges([1, 2, 3], [1, 2, 3], [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3), (3, 1)])
    assert not is_weakly_chordal(b)


@settings(max_examples=200)
@given(simple_graphs(max_n=8))
def test_weakly_chordal_matches_subset_oracle(g):
    assert is_weakly_chordal(g) == subset_cycle_weakly_chordal(g)


# --- misc --------------------------------------------------------------------


@given(simple_graphs(max_n=7))
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(simple_graphs(max_n=8))
def test_components_match_networkx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    ours = sorted(sorted(c) for c in connected_components(g))
    assert ours == sorted(sorted(c) for c in nx.connected_components(G))


@given(bipartite_graphs())
def test_to_simple_preserves_structure(g):
    sg, index = to_simple(g)
    assert sg.n == len(g.vertices)
    assert len(sg.edges) == len(g.edges)
    assert all(sg.has_edge(index[("x", i)], index[("y", j)]) for i, j in g.edges)
