"""Timing comparison of the compiled kernels against the numpy
reference on radar-sized inputs.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are imported directly, so the numbers are unaffected by
which one the package selected at import.
"""

import argparse
import time

import numpy as np

from ragc._kernels import _numpy_impl

try:
    from ragc._kernels import _core
except ImportError:
    _core = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def synth_inputs(num_scatterers, seed=0):
    rng = np.random.default_rng(seed)
    amp = rng.standard_normal(num_scatterers) + 1j * rng.standard_normal(
        num_scatterers)
    omega_fast = rng.uniform(-np.pi, np.pi, num_scatterers)
    omega_slow = rng.uniform(-np.pi, np.pi, num_scatterers)
    return amp, omega_fast, omega_slow


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repeats; best is reported")
    args = parser.parse_args()

    n, p = 256, 128
    cases = []
    for num_scat in (10, 100, 400):
        amp, wf, ws = synth_inputs(num_scat)
        cases.append((
            f"synth {num_scat:4d} scatterers -> {n}x{p}",
            lambda a=amp, f=wf, s=ws: _numpy_impl.synth_accumulate(a, f, s, n, p),
            (lambda a=amp, f=wf, s=ws: _core.synth_accumulate(a, f, s, n, p))
            if _core else None,
        ))

    rng = np.random.default_rng(1)
    power = rng.exponential(size=(n, p))
    cases.append((
        f"cfar ring stats {n}x{p} (guard 2, train 4)",
        lambda: _numpy_impl.cfar_ring_stats(power, 2, 2, 4, 4),
        (lambda: _core.cfar_ring_stats(power, 2, 2, 4, 4)) if _core else None,
    ))

    print(f"{'case':44s} {'numpy':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, numpy_fn, core_fn in cases:
        t_np = best_of(numpy_fn, args.repeat)
        if core_fn is None:
            print(f"{name:44s} {t_np * 1e3:9.3f}ms {'n/a':>10s} {'':>8s}")
            continue
        t_cy = best_of(core_fn, args.repeat)
        print(f"{name:44s} {t_np * 1e3:9.3f}ms {t_cy * 1e3:9.3f}ms "
              f"{t_np / t_cy:7.2f}x")
    if _core is None:
        print("\ncompiled extension not built; only the numpy backend ran")


if __name__ == "__main__":
    main()
