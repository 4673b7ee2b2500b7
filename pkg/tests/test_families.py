import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sbcgraph import (EMPTY, Block, DisjointFamily, FamilyError, SbcProfile, SimpleGraph, brute_force_d,
                      build_h0, build_h0_doubleprime, d_recursive, d_stratified, d_value, enumerate_families,
                      greedy_induced_matching, is_ordered, normalize_ordered, profile_to_graph,
                      replace_with_be, stratified_table, validate_family)
from sbcgraph.families import _as_bipartite_family
from sbcgraph.graph_core import adjacency, is_induced_matching

from conftest import profiles, simple_graphs

SMALL = SbcProfile(1, 5, 3, 6, (4, 5, 5, 6, 6))


def naive_families(g):
    """Every (sigma, r) reachable by picking disjoint complete bipartite pieces one at a time."""
    adj = adjacency(g)
    verts = list(g.vertices)
    edges = [(u, v) for u in verts for v in adj[u] if str(u) < str(v)]
    pieces = []
    for u, v in edges:
        # complete bipartite blocks containing the edge uv: A containing u, B containing v
        others = [w for w in verts if w not in (u, v)]
        for k in range(len(others) + 1):
            for extra in itertools.combinations(others, k):
                for split in itertools.product((0, 1), repeat=len(extra)):
                    A = {u} | {w for w, s in zip(extra, split) if s == 0}
                    B = {v} | {w for w, s in zip(extra, split) if s == 1}
                    if all(b in adj[a] for a in A for b in B):
                        pieces.append((frozenset(A | B), (u, v)))
    out = set()

    def extend(used, witnesses, start):
        if witnesses:
            out.add((used, len(witnesses)))
        for k in range(start, len(pieces)):
            verts_k, wit = pieces[k]
            if verts_k & used:
                continue
            if all(not ({wit[0], wit[1]} & (adj[a] | adj[b] | {a, b})) for a, b in witnesses):
                extend(used | verts_k, witnesses + [wit], k + 1)

    extend(frozenset(), [], 0)
    return out


# --- values and validation ---------------------------------------------------


def test_small_families():
    host = profile_to_graph(SMALL)
    good = DisjointFamily((Block((1, 2), (3, 4), (1, 3)), Block((3, 4), (5,), (3, 5))), host)
    assert validate_family(good) and d_value(good) == 5
    overlap = DisjointFamily((Block((1, 2), (3, 4), (1, 3)), Block((2, 3), (5,), (3, 5))), host)
    assert validate_family(overlap).condition == "1"
    incomplete = DisjointFamily((Block((1, 2), (3, 5), (1, 3)),), host)
    assert validate_family(incomplete).condition == "complete"
    touching = DisjointFamily((Block((1,), (3,), (1, 3)), Block((2,), (4,), (2, 4))), host)
    assert validate_family(touching).condition == "2"
    with pytest.raises(FamilyError):
        validate_family(DisjointFamily((Block((1,), (3,), (1, 3)),)))


def test_d_small():
    assert d_recursive(SMALL) == brute_force_d(SMALL)[0] == 6
    assert stratified_table(SMALL) == {1: 3, 2: 5, 3: 6}


def test_d_h0():
    h0 = build_h0()
    assert d_recursive(h0) == 23
    assert stratified_table(h0) == {1: 10, 2: 17, 3: 23, 4: 21}


def test_d_h0_doubleprime():
    assert d_recursive(build_h0_doubleprime()) == 25
    assert stratified_table(build_h0_doubleprime())[5] == 23


def test_d_empty_and_edgeless():
    assert d_recursive(EMPTY) == 0
    assert stratified_table(EMPTY) == {}
    assert d_stratified(EMPTY, 1) == (None, None)
    assert brute_force_d(SimpleGraph(3)) == (0, ())
    assert brute_force_d(SimpleGraph(3), 1) == (None, None)


def test_d_stratified_out_of_range():
    assert d_stratified(SMALL, 0) == (None, None)
    assert d_stratified(SMALL, 4) == (None, None)


# --- the exhaustive enumerator ------------------------------------------------


@settings(max_examples=60)
@given(simple_graphs(max_n=6))
def test_enumerator_matches_naive(g):
    assert set(enumerate_families(g)) == naive_families(g)


@settings(max_examples=40)
@given(profiles(max_nx=4, max_gap=2, max_tail=2))
def test_enumerator_witnesses_are_families(p):
    g = profile_to_graph(p)
    for (sigma, r), raw in enumerate_families(g).items():
        assert len(raw) == r
        used = set()
        for A, B, (u, v) in raw:
            assert not (used & (set(A) | set(B)))
            used |= set(A) | set(B)
            assert u in A and v in B
        assert used == set(sigma)
        assert is_induced_matching(g, [(u[1], v[1]) if u[0] == "x" else (v[1], u[1]) for _, _, (u, v) in raw])


# --- fast routines against brute force ------------------------------------------


@settings(max_examples=150)
@given(profiles(max_nx=5, max_gap=2, max_tail=2))
def test_d_recursive_equals_brute(p):
    assume(p.num_vertices <= 11)
    val, fam = brute_force_d(p)
    assert d_recursive(p) == val
    assert validate_family(fam) and d_value(fam) == val


@settings(max_examples=100)
@given(profiles(max_nx=5, max_gap=2, max_tail=2))
def test_stratified_equals_brute(p):
    assume(p.num_vertices <= 11)
    inm = greedy_induced_matching(p).m
    table = stratified_table(p)
    assert sorted(table) == list(range(1, inm + 1))
    for r in range(1, inm + 2):
        assert d_stratified(p, r)[0] == brute_force_d(p, r)[0]
    assert max(table.values()) == d_recursive(p)


@settings(max_examples=150)
@given(profiles(max_nx=10, max_shift=2))
def test_stratified_witness_is_ordered_family(p):
    for r, val in stratified_table(p).items():
        got, fam = d_stratified(p, r)
        assert got == val == d_value(fam)
        assert len(fam) == r
        assert validate_family(fam)
        assert is_ordered(fam, p)


# --- normalisation ------------------------------------------------------------------


@settings(max_examples=100)
@given(profiles(max_nx=5, max_gap=2, max_tail=2), st.data())
def test_normalize_ordered_keeps_r_and_value(p, data):
    assume(p.num_vertices <= 10)
    g = profile_to_graph(p)
    fams = enumerate_families(g)
    key = data.draw(st.sampled_from(sorted(fams, key=lambda k: (sorted(map(str, k[0])), k[1]))))
    fam = _as_bipartite_family(fams[key], g)
    out = normalize_ordered(fam, p)
    assert len(out) == len(fam)
    assert d_value(out) >= d_value(fam)
    assert is_ordered(out, p) and validate_family(out)


def test_normalize_rejects_invalid():
    host = profile_to_graph(SMALL)
    bad = DisjointFamily((Block((1,), (3,), (1, 3)), Block((2,), (4,), (2, 4))), host)
    with pytest.raises(FamilyError):
        normalize_ordered(bad, SMALL)


@settings(max_examples=150)
@given(profiles(max_nx=8, max_shift=2))
def test_replace_with_be(p):
    d = d_recursive(p)
    for r, val in stratified_table(p).items():
        if val != d:
            continue
        _, fam = d_stratified(p, r)
        if p.q not in fam.blocks[0].x_side:
            with pytest.raises(FamilyError):
                replace_with_be(fam, p)
            continue
        out = replace_with_be(fam, p)
        assert out.blocks[0].witness == (p.q, p.qprime)
        assert d_value(out) == d and len(out) == r


def test_replace_with_be_requires_maximum():
    _, fam = d_stratified(SMALL, 2)
    with pytest.raises(FamilyError):
        replace_with_be(fam, SMALL)


def test_stratified_witness_is_deterministic():
    a = [d_stratified(build_h0(), r)[1] for r in range(1, 5)]
    b = [d_stratified(build_h0(), r)[1] for r in range(1, 5)]
    assert a == b
    corners = [[(blk.m, blk.mprime) for blk in fam.blocks] for fam in a]
    assert corners[0] == [(3, 4)]
    assert corners[3] == [(1, 3), (3, 5), (8, 14), (14, 15)]
