"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

from cmlens import kernels
from cmlens.surgery import family_sigma


def cases():
    fam = list(family_sigma(10).entries)
    ones = [1] * 40
    row = list(kernels.backends()["python"].t_sweep(fam, 1000, False))
    return {
        "t_sweep family s=10, m=1000": lambda k: k.t_sweep(fam, 1000, False),
        "t_sweep exact 40 ones, m=600": lambda k: k.t_sweep(ones, 600, True),
        "plan_counts m=400": lambda k: k.plan_counts(400),
        "add_item value 7, m=2000": lambda k: k.add_item(list(range(2001)), 7, False),
        "row_check m=1000": lambda k: k.row_check(row, row, 50),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':34s}" + "".join(f"{name:>12s}" for name in impls) + "     speedup")
    for label, fn in cases().items():
        times = {}
        for name, mod in impls.items():
            times[name] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        cols = "".join(f"{times[n] * 1e3:10.2f}ms" for n in impls)
        speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
        print(f"{label:34s}{cols}{speed}")


if __name__ == "__main__":
    main()
