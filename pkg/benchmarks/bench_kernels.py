"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from rindler_atom import _kernels_py
from rindler_atom.grids import GridSpec
from rindler_atom.perturbation import HamiltonianSpec, expansion_coefficients

try:
    from rindler_atom import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def _ground_terms(n_max=30):
    exp = expansion_coefficients(HamiltonianSpec("gravity"), n_max).with_epsilon(3e-7)
    ns, ls, amps = zip(*exp.terms())
    return np.array(ns), np.array(ls), np.array(amps, dtype=float)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = {"python": _kernels_py}
    if _kernels_c is not None:
        backends["cython"] = _kernels_c
    else:
        print("compiled backend not built; timing python only")

    ns, ls, amps = _ground_terms()
    r = np.linspace(0.01, 40, 200_000)
    cases = {
        f"plane_density 256^2, {len(ns)} terms": lambda k, g=GridSpec(4.0, 256): k.plane_density(ns, ls, amps, g.xs, g.zs),
        f"plane_density 512^2, {len(ns)} terms": lambda k, g=GridSpec(4.0, 512): k.plane_density(ns, ls, amps, g.xs, g.zs),
        "radial_values n=30 l=1, 2e5 pts": lambda k: k.radial_values(30, 1, r),
    }

    print(f"{'case':40s}" + "".join(f"{b:>12s}" for b in backends) + "   speedup")
    for name, fn in cases.items():
        ref = fn(_kernels_py)
        times = {}
        for b, mod in backends.items():
            assert np.allclose(fn(mod), ref, rtol=1e-10, atol=1e-300), f"{b} disagrees on {name}"
            times[b] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
        print(f"{name:40s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times.values()) + "  " + speed)


if __name__ == "__main__":
    main()
