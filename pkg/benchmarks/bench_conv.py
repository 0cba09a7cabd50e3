"""Time the im2col convolution on the shapes homogenisation actually runs.

    python benchmarks/bench_conv.py [--repeats 20]

Prints forward and forward+backward milliseconds per call for the
reconstruction network's 3x3, width-8 layers at MNIST resolution.
"""
import argparse
import time

import numpy as np

from gdh import numerics as F


def bench(fn, repeats):
    fn()  # warm-up
    t = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        t.append(time.perf_counter() - t0)
    return 1e3 * float(np.median(t))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=20)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    for n, c, o, hw in [(128, 1, 8, 28), (128, 8, 8, 28), (128, 8, 1, 28), (512, 16, 32, 14)]:
        x = rng.standard_normal((n, c, hw, hw)).astype(np.float32)
        w = rng.standard_normal((o, c, 3, 3)).astype(np.float32)

        def fwd():
            with F.no_grad():
                F.conv2d(x, w, padding=1)

        def fwd_bwd():
            xt = F.Tensor(x, requires_grad=True)
            wt = F.Tensor(w, requires_grad=True)
            F.sum(F.conv2d(xt, wt, padding=1)).backward()

        print(f"N={n:4d} C={c:2d} O={o:2d} {hw}x{hw}: forward {bench(fwd, args.repeats):7.2f} ms, "
              f"forward+backward {bench(fwd_bwd, args.repeats):7.2f} ms")


if __name__ == "__main__":
    main()
