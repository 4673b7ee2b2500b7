"""Closed graphs given by clique intervals, their initial graphs and gluing.

For a closed labelling the quadratic binomial generators form a Gröbner
basis, so the initial ideal of J_G is the edge ideal of the bipartite
initial graph ini(G) with edges {x_i, y_j}, i < j, {i, j} in E(G).  Betti
information moves from ini(G) to S/J_G only in two directions: equal
regularity and projective dimension, and vanishing by upper
semicontinuity.  Nothing else is claimed here.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

import networkx as nx

from .betti import BettiSupport, betti_support_sbc
from .graph_core import BipartiteGraph, GraphError, SimpleGraph
from .sbc import SbcProfile, Violation, check_strongly_biconvex


@dataclass(frozen=True)
class ClosedGraph:
    n: int
    cliques: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cl = tuple((int(a), int(b)) for a, b in self.cliques)
        object.__setattr__(self, "cliques", cl)
        if not cl:
            raise GraphError("a closed graph needs at least one clique")
        for a, b in cl:
            if not (1 <= a < b <= self.n):
                raise GraphError(f"bad clique interval [{a}, {b}] for n = {self.n}")
        for (a1, b1), (a2, b2) in zip(cl, cl[1:]):
            if not (a1 < a2 and b1 < b2):
                raise GraphError(f"cliques [{a1}, {b1}] and [{a2}, {b2}] are not strictly increasing")
        covered = set()
        for a, b in cl:
            covered.update(range(a, b + 1))
        if covered != set(range(1, self.n + 1)):
            raise GraphError(f"cliques do not cover 1..{self.n}")

    def max_neighbor(self, i: int) -> int:
        """Largest vertex adjacent to i (i itself if none is larger)."""
        return max((b for a, b in self.cliques if a <= i <= b), default=i)


def closed_to_simple(c: ClosedGraph) -> SimpleGraph:
    edges = set()
    for a, b in c.cliques:
        edges.update(combinations(range(a, b + 1), 2))
    return SimpleGraph(c.n, frozenset(edges))


def is_closed_labeling(g: SimpleGraph) -> tuple[bool, Optional[list[tuple[int, int]]]]:
    """Exchange condition on the given labelling, then interval maximal cliques.

    Returns ``(True, cliques)`` with cliques as sorted intervals (singletons
    included), or ``(False, None)``.
    """
    edges = sorted(g.edges)
    for (i, j), (k, l) in combinations(edges, 2):
        if i == k and not g.has_edge(j, l):
            return False, None
        if j == l and not g.has_edge(i, k):
            return False, None
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(edges)
    out = []
    for clique in nx.find_cliques(G):
        lo, hi = min(clique), max(clique)
        if hi - lo + 1 != len(clique):
            return False, None
        out.append((lo, hi))
    return True, sorted(out)


def initial_graph(c: ClosedGraph) -> tuple[BipartiteGraph, SbcProfile]:
    if c.n < 2:
        raise GraphError("initial graph needs a closed graph with at least two vertices")
    g = closed_to_simple(c)
    ini = BipartiteGraph.from_edges(range(1, c.n), range(2, c.n + 1), sorted(g.edges))
    prof = check_strongly_biconvex(ini)
    if isinstance(prof, Violation) or prof.is_empty:
        raise RuntimeError(f"initial graph is not strongly biconvex: {prof}")
    return ini, prof


def initial_profile(c: ClosedGraph) -> SbcProfile:
    """Profile of ini(G) read straight off the cliques: M(i) = largest neighbour of i."""
    return SbcProfile(1, c.n - 1, 2, c.n, tuple(c.max_neighbor(i) for i in range(1, c.n)))


def glue(c1: ClosedGraph, c2: ClosedGraph) -> ClosedGraph:
    """Identify the last vertex of c1 with the first vertex of c2."""
    shift = c1.n - 1
    return ClosedGraph(c1.n + c2.n - 1, c1.cliques + tuple((a + shift, b + shift) for a, b in c2.cliques))


@dataclass(frozen=True)
class BinomialReport:
    n: int
    reg: int
    projdim: int
    initial_support: BettiSupport
    vanishing: tuple[tuple[int, int], ...]
    unique_extremal: Optional[bool]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "reg": self.reg,
            "projdim": self.projdim,
            "support_of_initial": self.initial_support.to_json(),
            "extremal_of_initial": [list(x) for x in self.initial_support.extremal],
            "binomial_vanishing_certificates": [list(x) for x in self.vanishing],
            "binomial_nonvanishing": {
                "row_projdim": self.projdim,
                "diagonal_reg": self.reg,
                "other_positions": "not determined",
            },
            "unique_extremal": "not determined" if self.unique_extremal is None else self.unique_extremal,
        }


def binomial_invariants(c: ClosedGraph) -> BinomialReport:
    """What the initial ideal determines about the Betti table of S/J_G."""
    _, prof = initial_graph(c)
    s = betti_support_sbc(prof)
    p, r = s.projdim, s.reg
    # beta_{i,j}(S/J_G) <= beta_{i,j}(S/in(J_G)): zeros of the initial transfer
    vanishing = tuple(
        (i, j)
        for i in range(1, p + 1)
        for j in range(i + 1, i + r + 1)
        if (i, j) not in s.positions
        and any(i >= k and j >= l for k, l in s.positions)
    )
    unique = False if (p, p + r) in vanishing else None
    return BinomialReport(c.n, r, p, s, vanishing, unique)
