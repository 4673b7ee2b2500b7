"""Graded Betti-number supports of R/I(G) for edge ideals.

Three routes:

* family search on any small weakly chordal graph: ``(i, sigma)`` is
  non-vanishing iff some strongly disjoint family covers exactly ``sigma``
  with ``|sigma| - i`` blocks;
* the profile fast path: per block count r the internal degrees form the
  column ``2r .. d_r + r``;
* Hochster's formula, ``beta_{i,sigma} = dim H~_{|sigma|-i-1}(Ind(G[sigma]))``,
  computed with exact elimination over a prime field.  This route is
  independent of the other two.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

import numpy as np

from .families import d_recursive, enumerate_families, stratified_table
from .graph_core import (BipartiteGraph, Graph, GraphError, SimpleGraph, adjacency, brute_force_inm,
                         induced_subgraph, is_weakly_chordal, to_simple)
from .sbc import Profile, greedy_induced_matching


@dataclass(frozen=True)
class BettiSupport:
    """Non-vanishing positions (i, j), i >= 1, of beta_{i,j}(R/I); beta_{0,0} is implicit."""

    positions: frozenset
    projdim: int
    reg: int
    extremal: tuple[tuple[int, int], ...]
    unique_extremal: bool

    @classmethod
    def from_positions(cls, positions: Iterable[tuple[int, int]]) -> "BettiSupport":
        pos = frozenset((int(i), int(j)) for i, j in positions)
        p = max((i for i, _ in pos), default=0)
        r = max((j - i for i, j in pos), default=0)
        corners = _corners(pos)
        unique = (p, p + r) in pos if pos else True
        return cls(pos, p, r, corners, unique)

    def to_json(self) -> dict:
        return {
            "projdim": self.projdim,
            "reg": self.reg,
            "positions": [list(x) for x in sorted(self.positions)],
            "extremal": [list(x) for x in self.extremal],
            "unique_extremal": self.unique_extremal,
        }


def _corners(pos) -> tuple[tuple[int, int], ...]:
    # (k, l) dominates (i, j) when k >= i and l - k >= j - i: homological
    # degree and regularity index both at least as large
    out = [(i, j) for i, j in pos
           if not any((k, l) != (i, j) and k >= i and l - k >= j - i for k, l in pos)]
    return tuple(sorted(out, key=lambda t: (-t[0], -t[1])))


def extremal_corners(s: BettiSupport) -> list[tuple[int, int]]:
    return list(_corners(s.positions))


def _require_weakly_chordal(g: Graph):
    if not is_weakly_chordal(g):
        raise GraphError("family characterisation is only available for weakly chordal graphs")


def multigraded_support(g: Graph, check_class: bool = True) -> set[tuple[frozenset, int]]:
    """All (sigma, i) with beta_{i,sigma}(R/I(g)) != 0, i >= 1, via family search."""
    if check_class:
        _require_weakly_chordal(g)
    return {(sigma, len(sigma) - r) for sigma, r in enumerate_families(g)}


def kimura_nonvanishing(g: Graph, sigma: Iterable, i: int) -> bool:
    _require_weakly_chordal(g)
    sigma = frozenset(sigma)
    if not sigma <= set(g.vertices):
        raise GraphError("sigma contains unknown vertices")
    if i == 0:
        return not sigma
    r = len(sigma) - i
    if r < 1:
        return False
    return (sigma, r) in enumerate_families(induced_subgraph(g, sigma))


def betti_support_weakly_chordal(g: Graph) -> BettiSupport:
    """Graded support by family search, cross-checked against inm and d."""
    multi = multigraded_support(g)
    s = BettiSupport.from_positions((i, len(sigma)) for sigma, i in multi)
    inm = brute_force_inm(g)[0]
    d = max((len(sigma) - (len(sigma) - i) for sigma, i in multi), default=0)
    if s.reg != inm:
        raise RuntimeError(f"regularity {s.reg} from families differs from inm {inm}")
    if s.projdim != d:
        raise RuntimeError(f"projdim {s.projdim} differs from d {d}")
    return s


def betti_support_sbc(p: Profile) -> BettiSupport:
    """Graded support of a strongly biconvex profile from the stratified maxima."""
    if p.is_empty:
        return BettiSupport.from_positions(())
    table = stratified_table(p)
    positions = {(j - r, j) for r, dr in table.items() for j in range(2 * r, dr + r + 1)}
    s = BettiSupport.from_positions(positions)
    d = d_recursive(p)
    inm = greedy_induced_matching(p).m
    if s.projdim != d or s.reg != inm:
        raise RuntimeError(f"support gives (p, r) = ({s.projdim}, {s.reg}), expected ({d}, {inm})")
    return s


def support_of_disjoint_union(supports: Iterable[BettiSupport]) -> BettiSupport:
    """Support of a tensor product of resolutions: Minkowski sum with (0, 0) kept."""
    acc = {(0, 0)}
    for s in supports:
        acc = {(i + k, j + l) for i, j in acc for k, l in s.positions | {(0, 0)}}
    acc.discard((0, 0))
    return BettiSupport.from_positions(acc)


# ---------------------------------------------------------------------------
# Hochster oracle


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


def rank_mod_p(mat, p: int) -> int:
    """Rank over GF(p) by Gaussian elimination on integer arrays."""
    A = np.array(mat, dtype=np.int64) % p
    if A.size == 0:
        return 0
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.nonzero(A[rank:, c])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, c]), -1, p)
        A[rank] = (A[rank] * inv) % p
        below = A[rank + 1:, c].copy()
        if below.any():
            A[rank + 1:] = (A[rank + 1:] - np.outer(below, A[rank])) % p
        rank += 1
    return rank


@dataclass(frozen=True)
class IndependenceComplex:
    """Independent sets of a simple graph on ``ground``; faces sorted tuples."""

    graph: SimpleGraph
    ground: frozenset

    def faces(self) -> list[tuple]:
        adj = adjacency(self.graph)
        verts = sorted(self.ground)
        out: list[tuple] = [()]
        frontier = [((), set(verts))]
        while frontier:
            nxt = []
            for face, allowed in frontier:
                start = face[-1] if face else None
                for v in sorted(allowed):
                    if start is not None and v <= start:
                        continue
                    f2 = face + (v,)
                    out.append(f2)
                    nxt.append((f2, allowed - adj[v] - {v}))
            frontier = nxt
        return out

    def reduced_homology(self, char: int) -> dict[int, int]:
        """Degree -> dim of reduced homology, degrees -1 .. top."""
        by_dim: dict[int, list[tuple]] = {}
        for f in self.faces():
            by_dim.setdefault(len(f) - 1, []).append(f)
        top = max(by_dim)
        index = {k: {f: n for n, f in enumerate(fs)} for k, fs in by_dim.items()}
        ranks = {}
        for k in range(0, top + 1):
            # boundary C_k -> C_{k-1}
            rows, cols = len(by_dim[k - 1]), len(by_dim[k])
            mat = np.zeros((rows, cols), dtype=np.int64)
            for c, face in enumerate(by_dim[k]):
                for pos in range(len(face)):
                    sub = face[:pos] + face[pos + 1:]
                    mat[index[k - 1][sub], c] = 1 if pos % 2 == 0 else char - 1
            ranks[k] = rank_mod_p(mat, char)
        dims = {}
        for k in range(-1, top + 1):
            dims[k] = len(by_dim[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        return dims


def _as_simple(g: Graph):
    if isinstance(g, BipartiteGraph):
        sg, index = to_simple(g)
        return sg, index
    return g, None


def hochster_betti(g: Graph, i: int, sigma: Iterable, char: int = 2) -> int:
    """beta_{i,sigma}(R/I(g)) over GF(char)."""
    if not _is_prime(char):
        raise ValueError(f"characteristic {char} is not prime")
    sg, index = _as_simple(g)
    sigma = frozenset(sigma)
    if index is not None:
        sigma = frozenset(index[v] for v in sigma)
    if not sigma <= set(sg.vertices):
        raise GraphError("sigma contains unknown vertices")
    sub = induced_subgraph(sg, sigma)
    dims = IndependenceComplex(sub, sigma).reduced_homology(char)
    return dims.get(len(sigma) - i - 1, 0)


def hochster_multigraded(g: Graph, char: int = 2, max_vertices: Optional[int] = 14) -> dict:
    """{(sigma, i): beta} for every non-zero multigraded Betti number with i >= 1."""
    if not _is_prime(char):
        raise ValueError(f"characteristic {char} is not prime")
    sg, index = _as_simple(g)
    if max_vertices is not None and sg.n > max_vertices:
        raise GraphError(f"{sg.n} vertices exceeds the desk-scale limit {max_vertices}")
    back = {k: v for v, k in index.items()} if index is not None else None
    adj = adjacency(sg)
    verts = list(sg.vertices)
    out = {}
    for size in range(2, len(verts) + 1):
        for sigma in combinations(verts, size):
            s = set(sigma)
            # an isolated vertex of G[sigma] makes the complex a cone
            if any(not (adj[v] & s) for v in sigma):
                continue
            dims = IndependenceComplex(induced_subgraph(sg, s), frozenset(s)).reduced_homology(char)
            for k, dim in dims.items():
                i = size - k - 1
                if dim and i >= 1:
                    key = frozenset(back[v] for v in sigma) if back else frozenset(sigma)
                    out[(key, i)] = dim
    return out


def hochster_support(g: Graph, char: int = 2, max_vertices: Optional[int] = 14) -> BettiSupport:
    multi = hochster_multigraded(g, char, max_vertices)
    return BettiSupport.from_positions((i, len(sigma)) for sigma, i in multi)
