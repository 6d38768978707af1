"""Time the jit kernels against the pure-numpy fallback.

Each case is run on both implementations (when numba is importable) and
the best wall time over the requested repeats is reported together with
the largest absolute disagreement between the two outputs.
"""

import argparse
import time

import numpy as np

from primering import _kernels


def best_time(fn, args, repeats):
    fn(*args)
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def build_cases(rng):
    f210 = rng.standard_normal(210) + 1j * rng.standard_normal(210)
    f1024 = rng.standard_normal(1024) + 1j * rng.standard_normal(1024)
    comb = np.arange(0, 4096, 4, dtype=np.int64)
    return [
        ("progression m=2048", "progression_probabilities", (4, 512, 2048)),
        ("progression m=4096", "progression_probabilities", (6, 683, 4096)),
        ("progression m=2^17", "progression_probabilities", (3, 43691, 131072)),
        ("sparse dft 1024/4096", "sparse_dft", (comb, 4096)),
        ("projection m=210", "apply_projection", (f210, 37)),
        ("projection m=1024", "apply_projection", (f1024, 311)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(
        description="compare jit and numpy kernel timings"
    )
    parser.add_argument(
        "--repeats", type=int, default=5, help="timing repeats per case"
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for the projection inputs"
    )
    args = parser.parse_args(argv)

    if not _kernels.HAS_NUMBA:
        print("numba is not importable; timing the numpy fallback only")
    elif not _kernels.USE_NUMBA:
        print(
            "note: PRIMERING_NO_NUMBA only changes library dispatch; "
            "both paths are timed here"
        )

    rng = np.random.default_rng(args.seed)
    header = f"{'case':<22} {'numpy':>10} {'jit':>10} {'speedup':>8} {'max diff':>10}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in build_cases(rng):
        numpy_fn = getattr(_kernels, name + "_numpy")
        t_numpy = best_time(numpy_fn, call_args, args.repeats)
        if _kernels.HAS_NUMBA:
            jit_fn = getattr(_kernels, "_" + name + "_jit")
            t_jit = best_time(jit_fn, call_args, args.repeats)
            diff = float(
                np.abs(numpy_fn(*call_args) - jit_fn(*call_args)).max()
            )
            print(
                f"{label:<22} {t_numpy * 1e3:>8.3f}ms {t_jit * 1e3:>8.3f}ms"
                f" {t_numpy / t_jit:>7.1f}x {diff:>10.2e}"
            )
        else:
            print(f"{label:<22} {t_numpy * 1e3:>8.3f}ms {'-':>10} {'-':>8} {'-':>10}")


if __name__ == "__main__":
    main()
