"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--states N]

Kernel timings call both modules directly in this process. The end-to-end
row runs the full six-reduction criterion in a child process per backend,
selected with TRIPARTITE_PPT_PURE_PYTHON.
"""
import argparse
import importlib
import os
import subprocess
import sys
import timeit

import numpy as np

END_TO_END = """
import time
from tripartite_ppt import BACKEND, entanglement_criterion, random_density
rhos = [random_density(s) for s in range({n})]
t = time.perf_counter()
for r in rhos:
    entanglement_criterion(r)
print(BACKEND, (time.perf_counter() - t) / {n})
"""


def _inputs():
    rng = np.random.default_rng(0)
    g8 = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
    h8 = 0.5 * (g8 + g8.conj().T)
    return h8, np.ascontiguousarray(h8[:4, :4])


def kernel_rows(mod, repeat):
    h8, h4 = _inputs()
    cases = {
        "eigvalsh 4x4": lambda: mod.eigvalsh(h4),
        "eigvalsh 8x8": lambda: mod.eigvalsh(h8),
        "partial_transpose_second": lambda: mod.partial_transpose_second(h4),
        "partial_trace": lambda: mod.partial_trace(h8, 1),
        "special_reduction": lambda: mod.special_reduction(h8, 0),
    }
    return {name: min(timeit.repeat(fn, number=repeat, repeat=5)) / repeat for name, fn in cases.items()}


def end_to_end(pure, n):
    env = dict(os.environ, TRIPARTITE_PPT_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run(
        [sys.executable, "-c", END_TO_END.format(n=n)], env=env, capture_output=True, text=True, check=True
    ).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=2000)
    ap.add_argument("--states", type=int, default=300)
    args = ap.parse_args()

    py = importlib.import_module("tripartite_ppt._pykernels")
    try:
        cy = importlib.import_module("tripartite_ppt._ckernels")
    except ImportError:
        cy = None
        print("compiled kernels not built; showing the pure-Python column only")

    py_rows = kernel_rows(py, args.repeat)
    cy_rows = kernel_rows(cy, args.repeat) if cy else {}
    print(f"{'kernel':<28}{'python [us]':>14}{'cython [us]':>14}{'speedup':>10}")
    for name, t_py in py_rows.items():
        t_cy = cy_rows.get(name)
        cy_txt = f"{t_cy * 1e6:14.2f}{t_py / t_cy:9.1f}x" if t_cy else f"{'-':>14}{'-':>10}"
        print(f"{name:<28}{t_py * 1e6:14.2f}{cy_txt}")

    _, t_py = end_to_end(True, args.states)
    backend, t_cy = end_to_end(False, args.states)
    label = "entanglement_criterion"
    if backend == "cython":
        print(f"{label:<28}{t_py * 1e6:14.2f}{t_cy * 1e6:14.2f}{t_py / t_cy:9.1f}x")
    else:
        print(f"{label:<28}{t_py * 1e6:14.2f}{'-':>14}{'-':>10}")


if __name__ == "__main__":
    main()
