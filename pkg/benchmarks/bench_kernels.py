"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends must return identical results; the script checks that
before printing timings.
"""

import argparse
import time

from zcolor import _kernels
from zcolor.coloring import coloring_matrix, coloring_space
from zcolor.diagram import compute_arcs, disjoint_union, pretzel
from zcolor.fixtures import load_fixture

CASES = [
    ("first_small_image L10n32 box 3", lambda b, m: _kernels.first_small_image(b["L10n32"], 3, 3)),
    ("first_small_image split box 6", lambda b, m: _kernels.first_small_image(b["p3"], 6, 1)),
    ("image_size_hits L8n6 box 4", lambda b, m: _kernels.image_size_hits(b["L8n6"], 4, 5, 500)),
    ("image_size_hits split box 4", lambda b, m: _kernels.image_size_hits(b["p3"], 4, 9, 500)),
    ("fox_count trefoil mod 5", lambda b, m: _kernels.fox_count(m["trefoil"], 5)),
    ("fox_count whitehead mod 3", lambda b, m: _kernels.fox_count(m["whitehead"], 3)),
    ("fox_count L8n6 mod 5", lambda b, m: _kernels.fox_count(m["L8n6"], 5)),
]


def _inputs():
    bases, mats = {}, {}
    for name in ("L10n32", "L8n6"):
        bases[name] = [list(v.colors) for v in coloring_space(load_fixture(name)).basis]
    two = disjoint_union(pretzel([2, -2, 2, -2]), pretzel([3, -3]))
    bases["p3"] = [list(v.colors) for v in coloring_space(two).basis]
    for name in ("trefoil", "whitehead", "L8n6"):
        d = load_fixture(name)
        mats[name] = coloring_matrix(d, compute_arcs(d))
    return bases, mats


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    bases, mats = _inputs()
    if _kernels.njit is None:
        print("numba is not installed; only the numpy path can run")
        return
    print(f"{'case':34s} {'numba s':>10s} {'numpy s':>10s} {'speedup':>8s}")
    for name, fn in CASES:
        _kernels.USE_NUMBA = True
        fn(bases, mats)  # compile outside the timing
        t_nb, r_nb = _time(lambda: fn(bases, mats), args.repeat)
        _kernels.USE_NUMBA = False
        t_np, r_np = _time(lambda: fn(bases, mats), args.repeat)
        same = _normal(r_nb) == _normal(r_np)
        print(f"{name:34s} {t_nb:10.5f} {t_np:10.5f} {t_np / t_nb:8.1f}" + ("" if same else "  MISMATCH"))


def _normal(r):
    if r is None or isinstance(r, int):
        return r
    return [list(map(int, x)) for x in r] if hasattr(r, "__len__") and len(r) and hasattr(r[0], "__len__") else list(map(int, r))


if __name__ == "__main__":
    main()
