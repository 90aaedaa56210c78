"""Compare the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from miscensus import _pykernels, kernels
from miscensus.enumeration import free_trees
from miscensus.graph import Graph


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def workloads():
    rng = random.Random(1)
    cycle = Graph.from_edges(40, [(i, (i + 1) % 40) for i in range(40)])
    dense = [random_graph(24, 0.5, rng) for _ in range(50)]
    sparse = [random_graph(30, 0.15, rng) for _ in range(20)]
    trees = list(free_trees(14))
    return [
        ("mis_count C40", "mis_count", [cycle]),
        ("mis_count 50 x G(24, 0.5)", "mis_count", dense),
        ("mis_count 20 x G(30, 0.15)", "mis_count", sparse),
        ("canonical_labelling 50 x G(24, 0.5)", "canonical_labelling", dense),
        (f"canonical_labelling {len(trees)} trees n=14", "canonical_labelling", trees),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        print("compiled extension not available; only the Python fallback is timed")
    from_compiled = None
    if kernels.BACKEND == "compiled":
        from miscensus import _kernels as from_compiled

    print(f"{'workload':44} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for label, fn, graphs in workloads():
        def run(mod):
            f = getattr(mod, fn)
            return lambda: [f(g.adj) for g in graphs]

        def result(mod):
            return [r if isinstance(r, int) else list(r) for r in run(mod)()]

        py = min(timeit.repeat(run(_pykernels), number=1, repeat=args.repeat))
        if from_compiled is None:
            print(f"{label:44} {py * 1e3:9.1f}ms {'-':>10} {'-':>8}")
            continue
        assert result(from_compiled) == result(_pykernels), label
        c = min(timeit.repeat(run(from_compiled), number=1, repeat=args.repeat))
        print(f"{label:44} {py * 1e3:9.1f}ms {c * 1e3:9.1f}ms {py / c:7.1f}x")


if __name__ == "__main__":
    main()
