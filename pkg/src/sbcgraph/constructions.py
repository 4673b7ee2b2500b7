"""Named constructions and a seeded generator of strongly biconvex profiles."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .closed import ClosedGraph, glue
from .graph_core import BipartiteGraph
from .sbc import SbcProfile, Violation, check_strongly_biconvex, profile_to_graph

H0_M = (4, 8, 13, 13, 13, 13, 13, 14, 16, 16, 16, 16, 16, 16, 16)
G0_CLIQUES = ((1, 3), (2, 5), (3, 9), (4, 14), (9, 15), (10, 17))


def build_h0() -> SbcProfile:
    """x_1..x_15, y_3..y_16; the graph whose edge ideal has two extremal Betti numbers."""
    return SbcProfile(1, 15, 3, 16, H0_M)


def build_h0_doubleprime() -> SbcProfile:
    """H_0 shifted up by one, plus x_1 and the edges x1y2, x1y3, x2y3."""
    shifted = profile_to_graph(build_h0().shifted(1))
    edges = shifted.edges + [(1, 2), (1, 3), (2, 3)]
    g = BipartiteGraph.from_edges((1,) + shifted.x_indices, (2, 3) + shifted.y_indices, edges)
    prof = check_strongly_biconvex(g)
    if isinstance(prof, Violation):
        raise RuntimeError(f"H0'' construction is not strongly biconvex: {prof.message}")
    return prof


def build_g0() -> ClosedGraph:
    return ClosedGraph(17, G0_CLIQUES)


def build_g0t(t: int) -> ClosedGraph:
    """t copies of G_0 glued end to end (16t + 1 vertices)."""
    if t < 1:
        raise ValueError("t must be at least 1")
    out = build_g0()
    for _ in range(t - 1):
        out = glue(out, build_g0())
    return out


# small closed pieces used for random gluings
CLOSED_LIBRARY = (
    ClosedGraph(2, ((1, 2),)),
    ClosedGraph(3, ((1, 3),)),
    ClosedGraph(3, ((1, 2), (2, 3))),
    ClosedGraph(4, ((1, 3), (2, 4))),
    ClosedGraph(5, ((1, 2), (2, 4), (3, 5))),
    ClosedGraph(6, ((1, 3), (2, 5), (4, 6))),
    ClosedGraph(4, ((1, 4),)),
)


def random_gluing(seed: int, pieces: int = 3) -> ClosedGraph:
    rng = random.Random(seed)
    out = rng.choice(CLOSED_LIBRARY)
    for _ in range(pieces - 1):
        out = glue(out, rng.choice(CLOSED_LIBRARY))
    return out


@dataclass(frozen=True)
class GapParams:
    """Shape of random profiles.

    ``jump_prob``/``max_jump`` control how fast M grows past its lower bound,
    which in turn sets the expected induced matching number.
    """

    max_qprime_gap: int = 3
    max_tail: int = 3
    jump_prob: float = 0.4
    max_jump: int = 3
    max_vertices: Optional[int] = None
    max_retries: int = 1000


def random_sbc(seed, nx: int, params: GapParams = GapParams()) -> SbcProfile:
    """Deterministic random profile on x_1..x_nx."""
    if nx < 1:
        raise ValueError("need at least one x-vertex")
    rng = random.Random(seed)
    for _ in range(params.max_retries):
        qp = 2 + rng.randint(0, params.max_qprime_gap)
        g = max(qp, nx + 1) + rng.randint(0, params.max_tail)
        if params.max_vertices is not None and nx + g - qp + 1 > params.max_vertices:
            continue
        M = []
        cur = 0
        for i in range(1, nx + 1):
            lo = max(qp, i + 1, cur)
            step = rng.randint(1, params.max_jump) if rng.random() < params.jump_prob else 0
            cur = min(lo + step, g)
            M.append(cur)
        M[-1] = g
        return SbcProfile(1, nx, qp, g, tuple(M))
    raise ValueError(f"could not sample a profile with nx = {nx} under {params}")
