import os
import subprocess
import sys

import pytest
from hypothesis import given

from miscensus import _pykernels, kernels
from miscensus.graph import Graph

from conftest import brute_mis, graphs

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled extension not built")


@given(graphs(max_n=12))
def test_python_count_matches_brute_force(g):
    assert _pykernels.mis_count(g.adj) == len(brute_mis(g))


@given(graphs(max_n=11))
def test_python_listing_is_exact(g):
    count, found = _pykernels.mis_list(g.adj, 10**6)
    assert count == len(found)
    assert sorted(found) == brute_mis(g)


@compiled
@given(graphs(max_n=30, p=0.3))
def test_backends_agree_on_counts(g):
    from miscensus import _kernels

    assert _kernels.mis_count(g.adj) == _pykernels.mis_count(g.adj)


@compiled
@given(graphs(max_n=14))
def test_backends_agree_on_listing_order(g):
    from miscensus import _kernels

    assert _kernels.mis_list(g.adj, 7) == _pykernels.mis_list(g.adj, 7)


@compiled
@given(graphs(max_n=14))
def test_backends_agree_on_canonical_labelling(g):
    from miscensus import _kernels

    assert list(_kernels.canonical_labelling(g.adj)) == list(_pykernels.canonical_labelling(g.adj))


def test_budget_raises_in_both_backends():
    g = Graph.from_edges(30, [(i, (i + 1) % 30) for i in range(30)])
    with pytest.raises(kernels.BudgetExceeded):
        _pykernels.mis_count(g.adj, budget=10)
    with pytest.raises(kernels.BudgetExceeded):
        kernels.mis_count(g.adj, budget=10)
    assert kernels.mis_count(g.adj, budget=10**7) == _pykernels.mis_count(g.adj)


def test_large_graphs_use_python_path():
    # K_{35,35} minus a perfect matching: 35 edge pairs plus the two sides
    g = Graph.from_edges(70, [(i, 35 + j) for i in range(35) for j in range(35) if i != j], cap=128)
    assert kernels.mis_count(g.adj) == _pykernels.mis_count(g.adj) == 37


def test_environment_forces_pure_python():
    env = dict(os.environ, MISCENSUS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from miscensus import kernels; print(kernels.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
