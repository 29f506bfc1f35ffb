"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Times ``first_feasible_split`` on infeasible cycles (a full scan of all
splits) and ``peel`` on large random graphs, for both backends.
"""
from __future__ import annotations

import argparse
import random
import timeit

from abpart import _backend, _kernels_py
from abpart.generators import cycle, gen_structure
from abpart.multigraph import Multigraph


def split_cases():
    for n in (12, 14, 16, 18):
        yield f"split C{n} (a=b=2, infeasible)", cycle(n), [2] * n, [2] * n


def peel_cases():
    for n in (2_000, 20_000):
        rng = random.Random(n)
        edges = {(rng.randrange(n), rng.randrange(n)) for _ in range(3 * n)}
        g = Multigraph(n, [(u, v) for u, v in edges if u != v])
        yield f"peel random n={n} (thr=2)", g, [2] * n
    g = gen_structure(200, 1.0, 0)
    yield "peel hypothesis-family n=200 (thr=2)", g, [2] * g.n


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = {"python": _kernels_py}
    if _backend.COMPILED:
        from abpart import _kernels

        impls["cython"] = _kernels
    else:
        print("compiled extension not built; timing the pure kernels only")

    print(f"{'case':42} " + " ".join(f"{k:>12}" for k in impls) + "   speedup")
    for name, g, a, b in split_cases():
        csr = g.csr()
        times = {k: min(timeit.repeat(lambda m=m: m.first_feasible_split(*csr, a, b), number=1, repeat=args.repeat)) for k, m in impls.items()}
        _row(name, times)
    for name, g, thr in peel_cases():
        csr = g.csr()
        members = bytearray([1]) * g.n
        times = {k: min(timeit.repeat(lambda m=m: m.peel(*csr, members, thr), number=1, repeat=args.repeat)) for k, m in impls.items()}
        _row(name, times)


def _row(name, times):
    cells = " ".join(f"{t * 1000:10.2f}ms" for t in times.values())
    speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
    print(f"{name:42} {cells} {speed}")


if __name__ == "__main__":
    main()
