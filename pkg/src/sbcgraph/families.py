"""Strongly disjoint families of complete bipartite subgraphs.

A family is a set of vertex-disjoint complete bipartite subgraphs (blocks),
each carrying a witness edge, such that the witnesses form an induced
matching.  Its value is ``sum(|V(B)|) - (number of blocks)``; ``d(G)`` is the
maximum value over all families.

Two routes compute these values: an exhaustive enumerator working on any
small graph, and fast routines specific to strongly biconvex profiles (the
prefix recursion ``d_recursive`` and the corner DP ``d_stratified``).
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .graph_core import X, Y, BipartiteGraph, Graph, adjacency, is_induced_matching
from .sbc import (EMPTY, Block, Profile, SbcProfile, b_e, greedy_induced_matching, prefix_delete,
                  profile_to_graph)

__all__ = [
    "Block", "DisjointFamily", "FamilyCheck", "d_value", "validate_family", "is_ordered",
    "enumerate_families", "brute_force_d", "normalize_ordered", "replace_with_be",
    "d_recursive", "d_stratified", "stratified_table",
]


@dataclass(frozen=True)
class DisjointFamily:
    blocks: tuple[Block, ...] = ()
    host: Optional[BipartiteGraph] = field(default=None, compare=False, repr=False)

    def __len__(self):
        return len(self.blocks)

    @property
    def vertices(self) -> set:
        out: set = set()
        for b in self.blocks:
            out |= b.vertices
        return out


@dataclass(frozen=True)
class FamilyCheck:
    ok: bool
    condition: Optional[str] = None
    message: str = ""

    def __bool__(self):
        return self.ok


class FamilyError(ValueError):
    """A family does not satisfy the preconditions of an operation."""


def _host_graph(host) -> BipartiteGraph:
    if isinstance(host, (SbcProfile, type(EMPTY))):
        return profile_to_graph(host)
    return host


def d_value(fam: DisjointFamily | Sequence[Block]) -> int:
    blocks = fam.blocks if isinstance(fam, DisjointFamily) else tuple(fam)
    return sum(b.size for b in blocks) - len(blocks)


def validate_family(fam: DisjointFamily, host=None) -> FamilyCheck:
    """Check disjointness (1), block completeness, then witnesses (2)."""
    host = _host_graph(host if host is not None else fam.host)
    if host is None:
        raise FamilyError("no host graph to validate against")
    seen: set = set()
    for k, b in enumerate(fam.blocks):
        overlap = seen & b.vertices
        if overlap:
            return FamilyCheck(False, "1", f"block {k} shares {sorted(overlap)} with an earlier block")
        seen |= b.vertices
    xs, ys = set(host.x_indices), set(host.y_indices)
    for k, b in enumerate(fam.blocks):
        if not set(b.x_side) <= xs or not set(b.y_side) <= ys:
            return FamilyCheck(False, "complete", f"block {k} uses vertices outside the host")
        for i in b.x_side:
            nbrs = set(host.x_neighbors(i))
            if not set(b.y_side) <= nbrs:
                return FamilyCheck(False, "complete", f"block {k}: x{i} misses part of its y side")
    if not is_induced_matching(host, [b.witness for b in fam.blocks]):
        return FamilyCheck(False, "2", "witness edges do not form an induced matching")
    return FamilyCheck(True)


def is_ordered(fam: DisjointFamily | Sequence[Block], p: SbcProfile) -> bool:
    """Blocks strictly ordered on both sides, interval sides, corner edges 3-disjoint."""
    blocks = fam.blocks if isinstance(fam, DisjointFamily) else tuple(fam)
    for a, b in zip(blocks, blocks[1:]):
        if not (a.M < b.m and a.Mprime < b.mprime):
            return False
    for b in blocks:
        if b.M - b.m + 1 != len(b.x_side) or b.Mprime - b.mprime + 1 != len(b.y_side):
            return False
    corners = [(b.m, b.mprime) for b in blocks]
    if not all(p.has_edge(i, j) for i, j in corners):
        return False
    return is_induced_matching(profile_to_graph(p), corners)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _index_graph(g: Graph):
    verts = list(g.vertices)
    index = {v: k for k, v in enumerate(verts)}
    adj = adjacency(g)
    masks = [0] * len(verts)
    for v, nbrs in adj.items():
        for w in nbrs:
            masks[index[v]] |= 1 << index[w]
    return verts, masks


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def enumerate_families(g: Graph) -> dict[tuple[frozenset, int], tuple]:
    """Every achievable (vertex set, block count) of a strongly disjoint family.

    Values are one witness family per key, as tuples of
    ``(part_a, part_b, (u, v))`` with vertex-level parts; keys and witnesses
    are produced deterministically.  Blocks need not be induced subgraphs.
    Exponential: intended for graphs with at most ~12 vertices.
    """
    verts, adj = _index_graph(g)
    n = len(verts)
    edges = sorted((u, v) for u in range(n) for v in _bits(adj[u]) if u < v)
    edge_id = {e: k for k, e in enumerate(edges)}

    # complete bipartitions of every vertex subset, grouped by crossing edge
    blocks_by_edge: list[list[tuple[int, int, int]]] = [[] for _ in edges]
    for U in range(1, 1 << n):
        if U & (U - 1) == 0:
            continue
        low = U & -U
        rest = U ^ low
        seen_edges: set[int] = set()
        # B ranges over nonempty subsets of U not containing the lowest vertex
        B = rest
        while B:
            A = U ^ B
            if all(adj[a] & B == B for a in _bits(A)):
                for a in _bits(A):
                    for b in _bits(B):
                        k = edge_id[(min(a, b), max(a, b))]
                        if k not in seen_edges:
                            seen_edges.add(k)
                            blocks_by_edge[k].append((U, A, B))
            B = (B - 1) & rest

    # edge conflicts: sharing a vertex or joined by an edge
    closed = [adj[u] | (1 << u) for u in range(n)]
    conflict = [0] * len(edges)
    for k, (u, v) in enumerate(edges):
        nb = closed[u] | closed[v]
        for k2, (s, t) in enumerate(edges):
            if (nb >> s) & 1 or (nb >> t) & 1:
                conflict[k] |= 1 << k2

    result: dict[tuple[int, int], tuple] = {}

    def extend(states: dict[int, tuple], allowed: int, r: int):
        for k in _bits(allowed):
            nxt: dict[int, tuple] = {}
            for sigma, fam in states.items():
                for U, A, B in blocks_by_edge[k]:
                    if sigma & U:
                        continue
                    s2 = sigma | U
                    if s2 not in nxt:
                        nxt[s2] = fam + ((A, B, edges[k]),)
            if not nxt:
                continue
            for s2, fam in nxt.items():
                result.setdefault((s2, r + 1), fam)
            later = allowed & ~conflict[k] & ~((1 << (k + 1)) - 1)
            extend(nxt, later, r + 1)

    extend({0: ()}, (1 << len(edges)) - 1, 0)

    def vset(mask):
        return frozenset(verts[i] for i in _bits(mask))

    out = {}
    for (sigma, r), fam in sorted(result.items()):
        out[(vset(sigma), r)] = tuple(
            (vset(A), vset(B), (verts[u], verts[v])) for A, B, (u, v) in fam)
    return out


def _as_bipartite_family(raw, host: BipartiteGraph) -> DisjointFamily:
    blocks = []
    for A, B, (u, v) in raw:
        part_x, part_y = (A, B) if next(iter(A))[0] == X else (B, A)
        if u[0] == Y:
            u, v = v, u
        blocks.append(Block(tuple(i for _, i in part_x), tuple(j for _, j in part_y), (u[1], v[1])))
    blocks.sort(key=lambda b: (b.m, b.mprime))
    return DisjointFamily(tuple(blocks), host)


def brute_force_d(g: Graph, r: Optional[int] = None):
    """Exact d(g) (or the best value with exactly r blocks) with a witness.

    Returns ``(value, family)``; ``(None, None)`` when no r-block family
    exists.  Bipartite hosts give a :class:`DisjointFamily`; simple hosts
    give the raw vertex-level family.
    """
    if isinstance(g, SbcProfile) or g is EMPTY:
        g = profile_to_graph(g)
    fams = enumerate_families(g)
    best = None
    for (sigma, k), raw in fams.items():
        if r is not None and k != r:
            continue
        val = len(sigma) - k
        if best is None or val > best[0]:
            best = (val, raw)
    if best is None:
        if r is None or r == 0:
            return 0, (DisjointFamily((), g) if isinstance(g, BipartiteGraph) else ())
        return None, None
    val, raw = best
    if isinstance(g, BipartiteGraph):
        return val, _as_bipartite_family(raw, g)
    return val, raw


# ---------------------------------------------------------------------------
# normalisation


def _hull(xs, ys, witness) -> Block:
    return Block(tuple(range(min(xs), max(xs) + 1)), tuple(range(min(ys), max(ys) + 1)), witness)


def _fill_intervals(blocks: list[Block]) -> list[Block]:
    """Replace the lowest block by its interval hull, strip it out of the rest, repeat."""
    work = [(set(b.x_side), set(b.y_side), b.witness) for b in blocks]
    out = []
    while work:
        work.sort(key=lambda t: (min(t[0]), min(t[1])))
        xs, ys, wit = work.pop(0)
        hull = _hull(xs, ys, wit)
        hx, hy = set(hull.x_side), set(hull.y_side)
        rest = []
        for oxs, oys, owit in work:
            oxs, oys = oxs - hx, oys - hy
            if not oxs or not oys or owit[0] not in oxs or owit[1] not in oys:
                raise RuntimeError("interval fill consumed a witness; family was not valid")
            rest.append((oxs, oys, owit))
        out.append(hull)
        work = rest
    return out


def _absorb_corners(blocks: list[Block], p: SbcProfile) -> list[Block]:
    """Move into each block the next block's vertices adjacent to its corner."""
    blocks = list(blocks)
    for k in range(len(blocks) - 1):
        b1, b2 = blocks[k], blocks[k + 1]
        corner_x, corner_y = b1.m, b1.mprime
        moved_x = {i for i in b2.x_side if p.has_edge(i, corner_y)}
        moved_y = {j for j in b2.y_side if p.has_edge(corner_x, j)}
        left_x, left_y = set(b2.x_side) - moved_x, set(b2.y_side) - moved_y
        if not left_x or not left_y:
            raise RuntimeError("corner absorption emptied a block")
        blocks[k] = _hull(set(b1.x_side) | moved_x, set(b1.y_side) | moved_y, (corner_x, corner_y))
        witness = b2.witness if (b2.witness[0] in left_x and b2.witness[1] in left_y) \
            else (min(left_x), min(left_y))
        blocks[k + 1] = Block(tuple(left_x), tuple(left_y), witness)
    if blocks:
        last = blocks[-1]
        blocks[-1] = Block(last.x_side, last.y_side, (last.m, last.mprime))
    return blocks


def normalize_ordered(fam: DisjointFamily, p: SbcProfile) -> DisjointFamily:
    """An ordered family with the same block count and no smaller value."""
    host = profile_to_graph(p)
    check = validate_family(fam, host)
    if not check:
        raise FamilyError(f"input family invalid at condition {check.condition}: {check.message}")
    blocks = _absorb_corners(_fill_intervals(list(fam.blocks)), p)
    out = DisjointFamily(tuple(blocks), host)
    if not validate_family(out) or not is_ordered(out, p) or d_value(out) < d_value(fam):
        raise RuntimeError("normalisation produced an invalid family")
    return out


def replace_with_be(fam: DisjointFamily, p: SbcProfile) -> DisjointFamily:
    """Swap the first block of a maximum ordered family containing x_q for B_e."""
    host = profile_to_graph(p)
    if not fam.blocks or not validate_family(fam, host) or not is_ordered(fam, p):
        raise FamilyError("family must be a valid ordered family")
    if p.q not in fam.blocks[0].x_side:
        raise FamilyError(f"x{p.q} is not in the first block")
    if d_value(fam) != d_recursive(p):
        raise FamilyError("family value is not d(H)")
    blocks = [b_e(p)] + [Block(b.x_side, b.y_side, (b.m, b.mprime)) for b in fam.blocks[1:]]
    out = DisjointFamily(tuple(blocks), host)
    if not validate_family(out) or not is_ordered(out, p) or d_value(out) != d_value(fam):
        raise RuntimeError("B_e replacement broke the family")
    return out


# ---------------------------------------------------------------------------
# fast routines on profiles


def d_recursive(p: Profile) -> int:
    """d of a profile via the B_e / delete-x_q recursion, memoised on prefix state."""
    if p.is_empty:
        return 0
    f = p.f
    M, q0 = p.M, p.q
    # subprofiles are determined by (q, q'); f, g and M are shared
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * (f - q0) + 1000))

    @lru_cache(maxsize=None)
    def d(q: int, qp: int) -> int:
        sub = SbcProfile(q, f, qp, p.g, M[q - q0:])
        t = min(qp - 1, f)
        Mq = M[q - q0]
        with_be = (t - q + 1) + (Mq - qp + 1) - 1 + _d_of(prefix_delete(sub, t, Mq))
        without = _d_of(prefix_delete(sub, q, qp - 1))
        return max(with_be, without)

    def _d_of(sub: Profile) -> int:
        return 0 if sub.is_empty else d(sub.q, sub.qprime)

    return d(p.q, p.qprime)


_NEG = -(1 << 60)


def _corner_weight(p: SbcProfile, a: int, c: int) -> int:
    return (min(c - 1, p.f) - a + 1) + (p.M_of(a) - c + 1) - 1


def _corner_block(p: SbcProfile, a: int, c: int) -> Block:
    return Block(tuple(range(a, min(c - 1, p.f) + 1)), tuple(range(c, p.M_of(a) + 1)), (a, c))


class _CornerDP:
    """best[k][a][c]: max value of a k-block ordered family whose first corner is (a, c)."""

    def __init__(self, p: SbcProfile, rmax: int):
        self.p = p
        nx, ny = p.f - p.q + 1, p.g - p.qprime + 1
        self.nx, self.ny = nx, ny
        layers = []
        prev_suffix = None
        for k in range(1, rmax + 1):
            layer = [[_NEG] * ny for _ in range(nx)]
            for ai in range(nx):
                a = p.q + ai
                for c in range(p.m(a), p.M_of(a) + 1):
                    w = _corner_weight(p, a, c)
                    if k == 1:
                        layer[ai][c - p.qprime] = w
                        continue
                    # next corner (a2, c2): a2 >= c and c2 > M(a)
                    a2i, c2i = c - p.q, p.M_of(a) + 1 - p.qprime
                    rest = prev_suffix[a2i][c2i] if a2i <= nx else _NEG
                    if rest > _NEG:
                        layer[ai][c - p.qprime] = w + rest
            layers.append(layer)
            prev_suffix = self._suffix_max(layer)
        self.layers = layers

    def _suffix_max(self, layer):
        nx, ny = self.nx, self.ny
        S = [[_NEG] * (ny + 1) for _ in range(nx + 1)]
        for ai in range(nx - 1, -1, -1):
            row, below, here = S[ai], S[ai + 1], layer[ai]
            for ci in range(ny - 1, -1, -1):
                row[ci] = max(here[ci], row[ci + 1], below[ci])
        return S

    def best(self, k: int) -> Optional[int]:
        v = max(max(row) for row in self.layers[k - 1])
        return None if v <= _NEG else v

    def witness(self, k: int) -> list[Block]:
        p = self.p
        target = self.best(k)
        blocks = []
        lo_a, lo_c = p.q, p.qprime
        for level in range(k, 0, -1):
            layer = self.layers[level - 1]
            found = None
            for ai in range(max(lo_a - p.q, 0), self.nx):
                for ci in range(max(lo_c - p.qprime, 0), self.ny):
                    if layer[ai][ci] == target:
                        found = (p.q + ai, p.qprime + ci)
                        break
                if found:
                    break
            a, c = found
            blocks.append(_corner_block(p, a, c))
            target -= _corner_weight(p, a, c)
            lo_a, lo_c = c, p.M_of(a) + 1
        return blocks


def stratified_table(p: Profile) -> dict[int, int]:
    """r -> best value over families with exactly r blocks, for 1 <= r <= inm."""
    if p.is_empty:
        return {}
    inm = greedy_induced_matching(p).m
    dp = _CornerDP(p, inm)
    return {r: dp.best(r) for r in range(1, inm + 1)}


def d_stratified(p: Profile, r: int):
    """Best value over families with exactly r blocks and a witness family.

    Returns ``(None, None)`` when r is outside ``1..inm``.
    """
    if p.is_empty or r < 1:
        return None, None
    inm = greedy_induced_matching(p).m
    if r > inm:
        return None, None
    dp = _CornerDP(p, r)
    val = dp.best(r)
    if val is None:
        raise RuntimeError(f"no {r}-block family although inm = {inm}")
    fam = DisjointFamily(tuple(dp.witness(r)), profile_to_graph(p))
    check = validate_family(fam)
    if not check or not is_ordered(fam, p) or d_value(fam) != val:
        raise RuntimeError(f"corner DP emitted an invalid witness: {check.message}")
    return val, fam
