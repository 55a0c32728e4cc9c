import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cutdecomp.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def report(request):
    """Print one pass/fail line for an acceptance criterion and keep it for the summary."""
    def emit(number: int, ok: bool, detail: str) -> None:
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
        print(line)
        request.config.stash[_LINES].append(line)
    return emit


@st.composite
def biconnected_graphs(draw, min_n=4, max_n=9):
    """Ear-built biconnected graphs; shrinks toward short cycles with few chords."""
    n = draw(st.integers(min_n, max_n))
    c = draw(st.integers(3, n))
    edges = {(i, (i + 1) % c) for i in range(c)}
    used = c
    while used < n:
        length = draw(st.integers(1, n - used))
        a = draw(st.integers(0, used - 1))
        b = draw(st.integers(0, used - 1).filter(lambda x: x != a))
        chain = [a, *range(used, used + length), b]
        edges.update(zip(chain, chain[1:]))
        used += length
    norm = {(min(u, v), max(u, v)) for u, v in edges}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
                         .filter(lambda p: p[0] < p[1]), max_size=n))
    return Graph.from_edges(sorted(norm | extra))
