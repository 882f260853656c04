"""Time the two oracle search kernels on the same instances.

    python3 benchmarks/bench_oracle.py [--repeat N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from pairconfig.graph import ExceptionalKind, build_graph, cycle, min_degree, petersen
from pairconfig.oracle import KERNELS, exact_solve


def instances(seed: int) -> list[tuple[str, object]]:
    out = [(f"exceptional {k.value}", k.reference()) for k in ExceptionalKind]
    out += [("C8", cycle(8)), ("C11", cycle(11)), ("Petersen", petersen())]
    rng = random.Random(seed)
    for i in range(4):
        n = 9 + i
        # resample until min degree 2, otherwise the search stops at the root
        while True:
            g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
            if min_degree(g) >= 2:
                break
        out.append((f"G(n={n}, p=0.3) #{i}", g))
    return out


def time_kernel(g, backend: str, repeat: int) -> tuple[float, int, bool]:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = exact_solve(g, backend=backend)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), res.nodes, res.configurable


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if "cython" not in KERNELS:
        raise SystemExit("compiled kernel not available; run 'pip install -e . --no-build-isolation'")

    print(f"{'instance':<26}{'nodes':>9}{'python ms':>12}{'cython ms':>12}{'speedup':>9}")
    total_py = total_cy = 0.0
    for name, g in instances(args.seed):
        tp, nodes, conf_py = time_kernel(g, "python", args.repeat)
        tc, nodes_cy, conf_cy = time_kernel(g, "cython", args.repeat)
        assert (nodes, conf_py) == (nodes_cy, conf_cy), name
        total_py += tp
        total_cy += tc
        print(f"{name:<26}{nodes:>9}{tp * 1e3:>12.2f}{tc * 1e3:>12.2f}{tp / tc:>8.1f}x")
    print(f"{'total':<26}{'':>9}{total_py * 1e3:>12.2f}{total_cy * 1e3:>12.2f}{total_py / total_cy:>8.1f}x")


if __name__ == "__main__":
    main()
