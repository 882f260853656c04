from __future__ import annotations

import random

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pairconfig.graph import Graph, PointSet, build_graph, components, generate_rdisk, induced, min_degree

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10, p: float | None = None) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if p is None:
        mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        seed = draw(st.integers(0, 2**32 - 1))
        rng = random.Random(seed)
        mask = [rng.random() < p for _ in pairs]
    return build_graph(n, [e for e, keep in zip(pairs, mask) if keep])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_rdisk(rng: random.Random, n: int, box: float, radius: float = 1.0) -> Graph:
    pts = tuple((rng.uniform(0, box), rng.uniform(0, box)) for _ in range(n))
    return generate_rdisk(PointSet(pts, radius))


def qualifying_components(g: Graph) -> list[Graph]:
    """Components with at least three vertices and minimum degree 2."""
    out = []
    for comp in components(g):
        sub, _ = induced(g, comp)
        if sub.n >= 3 and min_degree(sub) >= 2:
            out.append(sub)
    return out


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter) -> None:
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
