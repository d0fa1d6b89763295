from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ocn.digraph import Digraph
from ocn.instances import random_dico, random_msp

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


@st.composite
def oriented_digraphs(draw, max_n: int = 7, min_n: int = 1):
    """Arbitrary oriented graphs: every vertex pair is absent, forward or backward."""
    n = draw(st.integers(min_n, max_n))
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            kind = draw(st.integers(0, 2))
            if kind == 1:
                arcs.append((u, v))
            elif kind == 2:
                arcs.append((v, u))
    return Digraph.build(n, arcs)


@st.composite
def dags(draw, max_n: int = 7):
    n = draw(st.integers(1, max_n))
    arcs = [(u, v) for u in range(n) for v in range(u + 1, n) if draw(st.booleans())]
    return Digraph.build(n, arcs)


def msp_exprs(max_n: int = 12):
    return st.builds(random_msp, st.integers(1, max_n), st.integers(0, 2**32 - 1))


def dico_exprs(max_n: int = 12):
    return st.builds(random_dico, st.integers(1, max_n), st.integers(0, 2**32 - 1))


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    lines = request.config.stash.setdefault(_ACCEPTANCE, [])
    number = int(request.node.name.split("_")[2])
    recorded = []

    def record(number: int, title: str, ok: bool, detail: str) -> None:
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} [{detail}]"
        lines.append((number, line))
        recorded.append(line)
        print(line)
        assert ok, line

    yield record
    if not recorded:
        lines.append((number, f"criterion {number} FAIL: {request.node.name} raised before reporting"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
