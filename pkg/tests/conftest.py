import itertools
import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from sbcgraph import BipartiteGraph, SbcProfile, SimpleGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def profiles(draw, max_nx=6, max_gap=3, max_tail=3, max_shift=0):
    """Profiles drawn directly from the definition (independent of random_sbc)."""
    nx = draw(st.integers(1, max_nx))
    q = 1 + draw(st.integers(0, max_shift))
    qp = q + 1 + draw(st.integers(0, max_gap))
    f = q + nx - 1
    g = max(qp, f + 1) + draw(st.integers(0, max_tail))
    M, cur = [], 0
    for i in range(q, f + 1):
        cur = draw(st.integers(max(qp, i + 1, cur), g))
        M.append(cur)
    M[-1] = g
    return SbcProfile(q, f, qp, g, tuple(M))


@st.composite
def simple_graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = SimpleGraph.from_edges(n, chosen)
    return g


@st.composite
def bipartite_graphs(draw, max_side=5):
    nx_, ny = draw(st.integers(1, max_side)), draw(st.integers(1, max_side))
    pairs = [(i, j) for i in range(1, nx_ + 1) for j in range(1, ny + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True))
    return BipartiteGraph.from_edges(range(1, nx_ + 1), range(1, ny + 1), chosen)


def random_simple(seed: int, n: int, p: float = 0.5) -> SimpleGraph:
    rng = random.Random(seed)
    return SimpleGraph.from_edges(n, [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p])
