"""Strongly biconvex profiles and the linear-time greedy induced matching.

A profile stores a strongly biconvex graph without isolated vertices as the
index ranges ``[q, f]`` (x side) and ``[qprime, g]`` (y side) together with
the right endpoints ``M(i)``.  The neighbourhood of ``x_i`` is the interval
``[m(i), M(i)]`` with ``m(i) = max(qprime, i + 1)``.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Union

from .graph_core import X, Y, BipartiteGraph, GraphError


class ProfileError(ValueError):
    """A profile violates its invariants."""


class IsolatedVertexError(GraphError):
    """Profiles model graphs without isolated vertices only."""


@dataclass(frozen=True)
class SbcProfile:
    q: int
    f: int
    qprime: int
    g: int
    M: tuple[int, ...]

    def __post_init__(self):
        M = tuple(int(v) for v in self.M)
        object.__setattr__(self, "M", M)
        q, f, qp, g = self.q, self.f, self.qprime, self.g
        if q < 1 or qp < 1:
            raise ProfileError("indices must be positive")
        if len(M) != f - q + 1 or not M:
            raise ProfileError(f"M must list {f - q + 1} values for x_{q}..x_{f}")
        if not (q < qp and f < g):
            raise ProfileError(f"need q < q' and f < g, got q={q} q'={qp} f={f} g={g}")
        if M[-1] != g:
            raise ProfileError(f"M(f) = {M[-1]} must equal g = {g}")
        prev = 0
        for k, Mi in enumerate(M):
            i = q + k
            if Mi < prev:
                raise ProfileError(f"M decreases at x_{i}")
            if not (max(qp, i + 1) <= Mi <= g):
                raise ProfileError(f"x_{i}: need m(i) <= M(i) <= g, got M(i) = {Mi}")
            prev = Mi
        # with M nondecreasing and M(i) >= i + 1, every y in [q', g] is covered

    is_empty = False

    def m(self, i: int) -> int:
        return max(self.qprime, i + 1)

    def M_of(self, i: int) -> int:
        return self.M[i - self.q]

    def x_range(self) -> range:
        return range(self.q, self.f + 1)

    def y_range(self) -> range:
        return range(self.qprime, self.g + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return self.q <= i <= self.f and self.m(i) <= j <= self.M_of(i)

    @property
    def num_vertices(self) -> int:
        return (self.f - self.q + 1) + (self.g - self.qprime + 1)

    @property
    def num_edges(self) -> int:
        return sum(self.M_of(i) - self.m(i) + 1 for i in self.x_range())

    def shifted(self, k: int) -> "SbcProfile":
        """Same graph with every label increased by k."""
        return SbcProfile(self.q + k, self.f + k, self.qprime + k, self.g + k,
                          tuple(v + k for v in self.M))


@dataclass(frozen=True)
class EmptyProfile:
    is_empty = True
    num_vertices = 0
    num_edges = 0


EMPTY = EmptyProfile()

Profile = Union[SbcProfile, EmptyProfile]


@dataclass(frozen=True)
class Violation:
    """Why a labelled bipartite graph is not strongly biconvex."""

    condition: str
    witness: tuple[str, int]
    message: str


@dataclass(frozen=True)
class GreedyTrace:
    pairs: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Block:
    """Complete bipartite subgraph with a chosen witness edge."""

    x_side: tuple[int, ...]
    y_side: tuple[int, ...]
    witness: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "x_side", tuple(sorted(set(self.x_side))))
        object.__setattr__(self, "y_side", tuple(sorted(set(self.y_side))))
        object.__setattr__(self, "witness", tuple(self.witness))
        if not self.x_side or not self.y_side:
            raise ProfileError("block sides must be nonempty")
        if self.witness[0] not in self.x_side or self.witness[1] not in self.y_side:
            raise ProfileError(f"witness {self.witness} not inside the block")

    @property
    def size(self) -> int:
        return len(self.x_side) + len(self.y_side)

    @property
    def m(self) -> int:
        return self.x_side[0]

    @property
    def M(self) -> int:
        return self.x_side[-1]

    @property
    def mprime(self) -> int:
        return self.y_side[0]

    @property
    def Mprime(self) -> int:
        return self.y_side[-1]

    @property
    def vertices(self) -> set[tuple[str, int]]:
        return {(X, i) for i in self.x_side} | {(Y, j) for j in self.y_side}


def _contiguous(labels: tuple[int, ...]) -> bool:
    return not labels or labels[-1] - labels[0] + 1 == len(labels)


def check_strongly_biconvex(g: BipartiteGraph) -> Profile | Violation:
    """Profile of ``g`` under its given labelling, or the first violation.

    Condition "a": every x-neighbourhood is the interval [m(i), M(i)].
    Condition "b": M is nondecreasing.
    """
    if not _contiguous(g.x_indices) or not _contiguous(g.y_indices):
        raise GraphError("x-labels and y-labels must each form a contiguous range")
    if not g.x_indices and not g.y_indices:
        return EMPTY
    covered_y = set()
    for i, nbrs in g.adjacency:
        if not nbrs:
            raise IsolatedVertexError(f"x{i} is isolated")
        covered_y.update(nbrs)
    for j in g.y_indices:
        if j not in covered_y:
            raise IsolatedVertexError(f"y{j} is isolated")
    if not g.x_indices or not g.y_indices:
        raise IsolatedVertexError("one side is empty")
    qp = g.y_indices[0]
    M = []
    for i, nbrs in g.adjacency:
        lo, hi = max(qp, i + 1), nbrs[-1]
        if list(nbrs) != list(range(lo, hi + 1)):
            return Violation("a", (X, i), f"N(x{i}) = {list(nbrs)} is not the interval [{lo}, {hi}]")
        M.append(hi)
    for k in range(1, len(M)):
        if M[k] < M[k - 1]:
            i = g.x_indices[k - 1]
            return Violation("b", (X, i), f"M({i}) = {M[k - 1]} > M({i + 1}) = {M[k]}")
    return SbcProfile(g.x_indices[0], g.x_indices[-1], qp, g.y_indices[-1], tuple(M))


def profile_to_graph(p: Profile) -> BipartiteGraph:
    if p.is_empty:
        return BipartiteGraph((), (), ())
    adj = tuple((i, tuple(range(p.m(i), p.M_of(i) + 1))) for i in p.x_range())
    return BipartiteGraph(tuple(p.x_range()), tuple(p.y_range()), adj)


def greedy_induced_matching(p: Profile) -> GreedyTrace:
    """Maximum induced matching by one forward scan over the x side.

    After ``(i, j)`` is chosen, the next x is the first ``t >= j`` whose
    interval reaches past ``M(i)``; its partner is ``y_{M(i)+1}``.
    """
    if p.is_empty:
        return GreedyTrace(())
    M, q = p.M, p.q
    n = len(M)
    pairs = [(q, p.qprime)]
    reach = M[0]
    k = p.qprime - q
    while k < n:
        if M[k] > reach:
            j = reach + 1
            pairs.append((k + q, j))
            reach = M[k]
            k = j - q
        else:
            k += 1
    return GreedyTrace(tuple(pairs))


def max_y_neighbor(p: SbcProfile, j: int) -> int:
    """Largest x-index adjacent to y_j."""
    if not (p.qprime <= j <= p.g):
        raise GraphError(f"y{j} is not a vertex of the profile")
    t = min(j - 1, p.f)
    if t < p.q or p.M_of(t) < j:
        raise IsolatedVertexError(f"y{j} is isolated")
    return t


def prefix_delete(p: Profile, a: int, b: int) -> Profile:
    """Delete x_i (i <= a) and y_j (j <= b), then drop isolated vertices.

    Remaining neighbourhoods keep their right endpoints; vertices that lose
    all neighbours form an x-prefix and a y-prefix, so the result is again a
    profile (or EMPTY).
    """
    if p.is_empty:
        return EMPTY
    lo = max(a + 1, p.q) - p.q
    if lo >= len(p.M):
        return EMPTY
    k = bisect_right(p.M, b, lo=lo)
    if k >= len(p.M):
        return EMPTY
    q_new = p.q + k
    qp_new = max(p.qprime, b + 1, q_new + 1)
    return SbcProfile(q_new, p.f, qp_new, p.g, p.M[k:])


def b_e(p: SbcProfile) -> Block:
    """Block induced on N(x_q) and N(y_q'), witnessed by {x_q, y_q'}."""
    t = max_y_neighbor(p, p.qprime)
    return Block(tuple(range(p.q, t + 1)), tuple(range(p.qprime, p.M[0] + 1)), (p.q, p.qprime))
