"""Time the numba kernels against the numpy fallback on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import timeit
from fractions import Fraction

import numpy as np

from wittforge import kernels
from wittforge.abelian import FiniteAbelianGroup
from wittforge.fusionring import verlinde_sl2
from wittforge.qform import from_gram


def _cases():
    g = FiniteAbelianGroup((4, 4, 8, 8))
    pm = from_gram(g, [Fraction(1, 8), Fraction(3, 8), Fraction(1, 16), Fraction(5, 16)],
                   {(0, 2): Fraction(1, 4)})
    args_q = (g.coords, g.orders_array, g.strides, pm.qnum, pm.den, g.generator_indices)
    ring = verlinde_sl2(24)
    mat = ring.fusion_matrix(1)
    images = np.eye(g.rank, dtype=np.int64)
    return {
        f"check_quadratic |A|={g.order}": lambda b: b.check_quadratic(*args_q),
        f"orth_mask |A|={g.order}": lambda b: b.orth_mask(*args_q),
        f"gauss_sum |A|={g.order}": lambda b: b.gauss_sum(pm.qnum, pm.den),
        f"is_isometry |A|={g.order}": lambda b: b.is_isometry(
            g.coords, images, g.orders_array, g.strides, pm.qnum, pm.qnum),
        "power_iteration sl2:24": lambda b: b.power_iteration(mat, 1e-12, 100_000),
        "associativity sl2:24": lambda b: b.associativity_defect(ring.N),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = [("numpy", kernels.numpy_backend)]
    if kernels.numba_backend is not None:
        backends.append(("numba", kernels.numba_backend))
    else:
        print("numba unavailable; timing numpy only")
    print(f"{'kernel':<32}" + "".join(f"{name:>12}" for name, _ in backends))
    for label, fn in _cases().items():
        row = f"{label:<32}"
        for _, backend in backends:
            fn(backend)  # warm-up / JIT
            best = min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat))
            row += f"{best * 1e3:>10.3f}ms"
        print(row)


if __name__ == "__main__":
    main()
