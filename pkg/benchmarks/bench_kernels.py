"""Time the numpy and numba kernel backends on the same inputs.

Run:  python3 benchmarks/bench_kernels.py [--sizes 64 1024 16384] [--repeat 5]

Numba is warmed up first so compile time is excluded. Outputs are checked
for agreement before anything is timed.
"""
import argparse
import timeit

import numpy as np

from zgroupoid._kernels import _numba as nb
from zgroupoid._kernels import _numpy as npk


def cases(n, rng):
    w = rng.random(n)
    m = rng.integers(0, n, size=n).astype(np.int64)
    lim = np.full(n, w.sum() / n)
    steps = 200
    return {
        "grid_distance": (min(n, 2048),),
        "push_forward": (w, m),
        "cycle_representatives": (m,),
        "orbit_counts": (m, 0, steps * 10),
        "cesaro_sum": (w, m, steps),
        "cesaro_distances": (w, m, steps, lim),
    }


def agree(a, b):
    if isinstance(a, tuple):
        return all(agree(x, y) for x, y in zip(a, b))
    return np.allclose(a, b, rtol=0, atol=1e-9)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[64, 1024, 16384])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    for name, a in cases(8, rng).items():  # compile
        getattr(nb, name)(*a)

    print(f"{'kernel':<24}{'n':>8}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for n in args.sizes:
        for name, a in cases(n, rng).items():
            f_np, f_nb = getattr(npk, name), getattr(nb, name)
            if not agree(f_np(*a), f_nb(*a)):
                raise SystemExit(f"{name} disagrees at n={n}")
            t_np = min(timeit.repeat(lambda: f_np(*a), number=1, repeat=args.repeat)) * 1e3
            t_nb = min(timeit.repeat(lambda: f_nb(*a), number=1, repeat=args.repeat)) * 1e3
            print(f"{name:<24}{n:>8}{t_np:>12.3f}{t_nb:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
