from __future__ import annotations

import pytest

from cyclepack.graph import DirectedGraph


@pytest.fixture
def theta():
    # a, b: u -> v ; c: v -> u
    return DirectedGraph.from_pairs([("u", "v"), ("u", "v"), ("v", "u")])


@pytest.fixture
def two_loops():
    return DirectedGraph.from_pairs([("v", "v"), ("v", "v")])


@pytest.fixture
def two_cycle():
    return DirectedGraph.from_pairs([("u", "v"), ("v", "u")])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
