"""Time the Dhar oracle kernels: numba against the pure-numpy fallback.

    python3 benchmarks/bench_dhar.py [--genus 3] [--repeat 3]
"""

import argparse
import time

import numpy as np

from chainloop import uniform_chain
from chainloop.dhar import discretize, load_kernels
from chainloop.picard import class_representative
from chainloop.search import lattice_classes


def workload(g: int, max_degree: int):
    G = uniform_chain(g)
    disc = discretize(G)
    F = disc.graph
    chips = [disc.chips(class_representative(G, c)) for c in lattice_classes(G, disc, range(0, max_degree + 1))]
    return F, chips


def run(kernels, F, chips, r: int) -> tuple[float, int]:
    levels = F.bfs_levels(0)
    t0 = time.perf_counter()
    hits = 0
    for D in chips:
        red = kernels.reduce_any(F.indptr, F.indices, levels, D, 0)
        if red[0] >= 0 and kernels.all_subtractions_effective(F.indptr, F.indices, levels, red, 0, r):
            hits += 1
    return time.perf_counter() - t0, hits


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--genus", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("-r", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    F, chips = workload(args.genus, args.max_degree)
    print(f"graph: {F.n} nodes, {len(F.edges)} edges; {len(chips)} divisors; rank >= {args.r}")
    results = {}
    for name in ("numba", "numpy"):
        k = load_kernels(name)
        run(k, F, chips[:2], args.r)  # compile / warm up
        times = []
        for _ in range(args.repeat):
            dt, hits = run(k, F, chips, args.r)
            times.append(dt)
        results[name] = (min(times), hits)
        print(f"{name:>6}: best {min(times) * 1e3:9.1f} ms  median {np.median(times) * 1e3:9.1f} ms  rank hits {hits}")
    assert results["numba"][1] == results["numpy"][1], "backends disagree"
    print(f"speedup: {results['numpy'][0] / results['numba'][0]:.1f}x")


if __name__ == "__main__":
    main()
