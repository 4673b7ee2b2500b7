"""Explicit graph representations and definition-level brute-force oracles.

Bipartite vertices are ``(side, label)`` pairs with side ``"x"`` or ``"y"``,
so ``x_3`` and ``y_3`` can coexist in one graph.  Simple-graph vertices are
plain positive integers.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Sequence, Union

X = "x"
Y = "y"

Vertex = Hashable


class GraphError(ValueError):
    """Malformed graph input or an operation applied to incompatible data."""


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with labelled sides.

    ``adjacency`` maps every x-label to the sorted tuple of its y-neighbours.
    """

    x_indices: tuple[int, ...]
    y_indices: tuple[int, ...]
    adjacency: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        xs, ys = tuple(sorted(self.x_indices)), tuple(sorted(self.y_indices))
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise GraphError("duplicate vertex label")
        object.__setattr__(self, "x_indices", xs)
        object.__setattr__(self, "y_indices", ys)
        yset = set(ys)
        adj = dict(self.adjacency)
        if set(adj) - set(xs):
            raise GraphError(f"adjacency for unknown x-labels {sorted(set(adj) - set(xs))}")
        norm = []
        for i in xs:
            nbrs = tuple(adj.get(i, ()))
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"duplicate edge at x{i}")
            if not set(nbrs) <= yset:
                raise GraphError(f"x{i} adjacent to unknown y-label")
            norm.append((i, tuple(sorted(nbrs))))
        object.__setattr__(self, "adjacency", tuple(norm))

    @classmethod
    def from_edges(cls, x: Iterable[int], y: Iterable[int], edges: Iterable[tuple[int, int]]):
        adj: dict[int, list[int]] = {}
        for i, j in edges:
            adj.setdefault(i, []).append(j)
        return cls(tuple(x), tuple(y), tuple((i, tuple(v)) for i, v in adj.items()))

    @property
    def vertices(self) -> list[tuple[str, int]]:
        return [(X, i) for i in self.x_indices] + [(Y, j) for j in self.y_indices]

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in self.adjacency for j in nbrs]

    def x_neighbors(self, i: int) -> tuple[int, ...]:
        return dict(self.adjacency)[i]

    def y_neighbors(self, j: int) -> tuple[int, ...]:
        return tuple(i for i, nbrs in self.adjacency if j in nbrs)

    def has_edge(self, i: int, j: int) -> bool:
        return j in dict(self.adjacency).get(i, ())


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected loopless graph.

    ``vertices`` defaults to ``1..n``; induced subgraphs keep their original
    labels, so it may be any set of positive integers.
    """

    n: int
    edges: frozenset = frozenset()
    vertices: tuple[int, ...] = field(default=())

    def __post_init__(self):
        verts = tuple(sorted(self.vertices)) if self.vertices else tuple(range(1, self.n + 1))
        if len(verts) != self.n or len(set(verts)) != len(verts):
            raise GraphError("vertex count does not match vertex labels")
        vset = set(verts)
        norm = set()
        for e in self.edges:
            i, j = tuple(e)
            if i == j:
                raise GraphError(f"loop at {i}")
            if i not in vset or j not in vset:
                raise GraphError(f"edge {e} has an unknown endpoint")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], vertices: Sequence[int] = ()):
        edges = list(edges)
        pairs = {(min(e), max(e)) for e in edges}
        if len(pairs) != len(edges):
            raise GraphError("duplicate edge")
        return cls(n, frozenset(pairs), tuple(vertices))

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges


Graph = Union[BipartiteGraph, SimpleGraph]


@dataclass(frozen=True)
class Matching:
    """Edges given as label pairs: (x-label, y-label) for bipartite hosts."""

    edges: tuple[tuple[int, int], ...] = ()

    def __len__(self):
        return len(self.edges)


def adjacency(g: Graph) -> dict[Vertex, frozenset]:
    """Vertex -> neighbour set, for either graph kind."""
    if isinstance(g, BipartiteGraph):
        adj: dict[Vertex, set] = {v: set() for v in g.vertices}
        for i, j in g.edges:
            adj[(X, i)].add((Y, j))
            adj[(Y, j)].add((X, i))
    else:
        adj = {v: set() for v in g.vertices}
        for i, j in g.edges:
            adj[i].add(j)
            adj[j].add(i)
    return {v: frozenset(s) for v, s in adj.items()}


def edge_vertices(g: Graph, pair: tuple[int, int]) -> tuple[Vertex, Vertex]:
    if isinstance(g, BipartiteGraph):
        return (X, pair[0]), (Y, pair[1])
    return pair[0], pair[1]


def _vertex_pair_to_label_pair(g: Graph, u: Vertex, v: Vertex) -> tuple[int, int]:
    if isinstance(g, BipartiteGraph):
        if u[0] == Y:
            u, v = v, u
        return u[1], v[1]
    return (min(u, v), max(u, v))


def to_simple(g: BipartiteGraph) -> tuple[SimpleGraph, dict[tuple[str, int], int]]:
    """Relabel a bipartite graph as a simple graph on 1..|V| (x's first)."""
    index = {v: k for k, v in enumerate(g.vertices, start=1)}
    edges = [(index[(X, i)], index[(Y, j)]) for i, j in g.edges]
    return SimpleGraph.from_edges(len(index), edges), index


def graph_vertices(g: Graph) -> list:
    return list(g.vertices)


def induced_subgraph(g: Graph, keep: Iterable) -> Graph:
    keep = set(keep)
    unknown = keep - set(g.vertices)
    if unknown:
        raise GraphError(f"unknown vertices {sorted(unknown, key=str)}")
    if isinstance(g, BipartiteGraph):
        xs = [i for i in g.x_indices if (X, i) in keep]
        ys = [j for j in g.y_indices if (Y, j) in keep]
        yset = set(ys)
        edges = [(i, j) for i, j in g.edges if (X, i) in keep and j in yset]
        return BipartiteGraph.from_edges(xs, ys, edges)
    verts = [v for v in g.vertices if v in keep]
    edges = [(i, j) for i, j in g.edges if i in keep and j in keep]
    return SimpleGraph(len(verts), frozenset(edges), tuple(verts))


def _check_pairs_are_edges(g: Graph, pairs: Iterable[tuple[int, int]]):
    for pair in pairs:
        i, j = pair
        ok = g.has_edge(i, j) if isinstance(g, BipartiteGraph) else (
            i in g.vertices and j in g.vertices and g.has_edge(i, j))
        if not ok:
            raise GraphError(f"{pair} is not an edge of the graph")


def is_induced_matching(g: Graph, m: Matching | Sequence[tuple[int, int]]) -> bool:
    """Pairwise vertex-disjoint edges with no host edge joining two of them.

    Raises GraphError if some pair is not an edge of ``g``.
    """
    pairs = list(m.edges if isinstance(m, Matching) else m)
    _check_pairs_are_edges(g, pairs)
    adj = adjacency(g)
    ends = [edge_vertices(g, p) for p in pairs]
    for (a, b), (c, d) in combinations(ends, 2):
        if {a, b} & {c, d}:
            return False
        if c in adj[a] or d in adj[a] or c in adj[b] or d in adj[b]:
            return False
    return True


def _conflict_masks(g: Graph) -> tuple[list[tuple[int, int]], list[int]]:
    """Edges of g and, per edge, the bitmask of edges it cannot coexist with."""
    adj = adjacency(g)
    pairs = sorted(g.edges)
    ends = [edge_vertices(g, p) for p in pairs]
    masks = [0] * len(pairs)
    for a, (u, v) in enumerate(ends):
        closed = adj[u] | adj[v] | {u, v}
        for b in range(a + 1, len(pairs)):
            s, t = ends[b]
            if s in closed or t in closed:
                masks[a] |= 1 << b
                masks[b] |= 1 << a
    return pairs, masks


def _popcount(x: int) -> int:
    return bin(x).count("1")


def max_independent_set(masks: list[int]) -> list[int]:
    """Exact maximum independent set of the graph given by neighbour bitmasks.

    Branch and bound: greedy min-degree lower bound, greedy clique-cover upper
    bound, branching on the closed neighbourhood of a minimum-degree vertex.
    """
    n = len(masks)
    full = (1 << n) - 1

    def greedy(cand: int) -> list[int]:
        out = []
        while cand:
            v = min(_bits(cand), key=lambda u: _popcount(masks[u] & cand))
            out.append(v)
            cand &= ~(masks[v] | (1 << v))
        return out

    def clique_cover_bound(cand: int) -> int:
        count = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            clique = 1 << v
            common = masks[v] & cand
            while common:
                u = (common & -common).bit_length() - 1
                clique |= 1 << u
                common &= masks[u]
            cand &= ~clique
            count += 1
        return count

    best = greedy(full)

    def search(cand: int, chosen: list[int]):
        nonlocal best
        if not cand:
            if len(chosen) > len(best):
                best = list(chosen)
            return
        if len(chosen) + clique_cover_bound(cand) <= len(best):
            return
        v = min(_bits(cand), key=lambda u: _popcount(masks[u] & cand))
        # some vertex of N[v] lies in every maximal independent set of cand
        for u in _bits((masks[v] | (1 << v)) & cand):
            chosen.append(u)
            search(cand & ~(masks[u] | (1 << u)), chosen)
            chosen.pop()
            # forbid u in later branches: keeps the search exact and non-redundant
            cand &= ~(1 << u)

    search(full, [])
    return sorted(best)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def brute_force_inm(g: Graph) -> tuple[int, Matching]:
    """Maximum induced matching by exact search on the edge-conflict graph."""
    pairs, masks = _conflict_masks(g)
    if not pairs:
        return 0, Matching()
    chosen = max_independent_set(masks)
    return len(chosen), Matching(tuple(pairs[k] for k in chosen))


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = {(i, j) for i, j in combinations(g.vertices, 2) if not g.has_edge(i, j)}
    return SimpleGraph(g.n, frozenset(edges), g.vertices)


def _has_long_induced_cycle(g: SimpleGraph, min_len: int = 5) -> bool:
    """DFS over chordless paths whose smallest vertex is the start."""
    adj = adjacency(g)
    for s in g.vertices:
        # path s = p0, p1, ..., pk; every vertex > s, chordless
        stack = [(s, (s,))]
        while stack:
            v, path = stack.pop()
            for w in adj[v]:
                if w <= s or w in path:
                    continue
                inner = path[1:-1]
                if any(w in adj[u] for u in inner):
                    continue
                if len(path) >= 2 and s in adj[w]:
                    if len(path) + 1 >= min_len and path[1] < w:
                        return True
                    # closing edge to s is a chord once the path extends further
                    continue
                stack.append((w, path + (w,)))
    return False


def is_weakly_chordal(g: Graph) -> bool:
    """Neither g nor its complement has an induced cycle of length >= 5."""
    if isinstance(g, BipartiteGraph):
        g = to_simple(g)[0]
    return not _has_long_induced_cycle(g) and not _has_long_induced_cycle(complement(g))


def connected_components(g: Graph) -> list[set]:
    adj = adjacency(g)
    seen: set = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps
