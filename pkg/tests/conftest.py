import random
import sys

import pytest
from hypothesis import strategies as st

from centrality_improvement import DominatingSetInstance, Graph, ds_to_closeness

# six-vertex dominating-set example: u1..u6 are 0..5
EXAMPLE_EDGES = [(0, 2), (1, 3), (1, 4), (1, 5), (2, 3)]


@pytest.fixture
def example_graph():
    return Graph(6, EXAMPLE_EDGES)


@pytest.fixture
def example_instance(example_graph):
    """Closeness instance built from the example with k=2; z is vertex 6."""
    return ds_to_closeness(DominatingSetInstance(example_graph, 2)).inst


def random_graph(rng: random.Random, n: int, p: float, directed: bool = False) -> Graph:
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [e for e in pairs if rng.random() < p], directed=directed)


@st.composite
def graphs(draw, min_n=1, max_n=8, directed=None):
    n = draw(st.integers(min_n, max_n))
    if directed is None:
        directed = draw(st.booleans())
    if directed:
        pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    else:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, mask) if keep], directed=directed)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
