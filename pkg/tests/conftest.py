import os
import shutil
import subprocess
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from miscensus.graph import Graph

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def graphs(draw, min_n=0, max_n=10, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if p is None:
        mask = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
        edges = [e for k, e in enumerate(pairs) if mask >> k & 1]
    else:
        edges = [e for e in pairs if draw(st.floats(0, 1)) < p]
    return Graph.from_edges(n, edges)


def brute_mis(g):
    """All maximal independent sets by scanning every vertex subset."""
    out = []
    for s in range(1 << g.n):
        if any(s >> v & 1 and g.adj[v] & s for v in range(g.n)):
            continue
        if all(s >> v & 1 or g.adj[v] & s for v in range(g.n)):
            out.append(s)
    return out


# -- external graph6 streams -----------------------------------------------------

def _geng():
    exe = os.environ.get("MIS_GENG") or shutil.which("geng")
    return exe if exe and os.access(exe, os.X_OK) else None


@pytest.fixture(scope="session")
def graph6_stream(tmp_path_factory):
    """Return a function giving the path of a graph6 file, or None when unavailable.

    Files are looked up in ``MIS_G6_DIR`` first (named ``tf<n>.g6`` for
    connected triangle-free graphs and ``all<n>.g6`` for all graphs), then
    produced with nauty's ``geng`` when it is on PATH or named by ``MIS_GENG``.
    """
    cache = tmp_path_factory.mktemp("g6")
    flags = {"tf": "-ctq", "all": "-q"}

    def get(kind: str, n: int):
        name = f"{kind}{n}.g6"
        d = os.environ.get("MIS_G6_DIR")
        if d and (Path(d) / name).exists():
            return Path(d) / name
        target = cache / name
        if target.exists():
            return target
        exe = _geng()
        if exe is None:
            return None
        with open(target, "w") as fh:
            subprocess.run([exe, flags[kind], str(n)], stdout=fh, check=True)
        return target

    return get


# -- acceptance summary ------------------------------------------------------------

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
