"""Benchmark the convolution backends on training-realistic shapes.

Usage: python3 benchmarks/bench_conv.py [--repeats N]

Times forward and backward passes of conv2d for both the pure-numpy
backend and (when built) the compiled extension, on the layer shapes the
desk-profile networks actually see, and prints a small table.
"""

import argparse
import time

import numpy as np

from scalechannels import backend

# (label, batch, cin, cout, size, k, stride, padding)
SHAPES = [
    ("cnn block1   ", 64, 1, 16, 56, 3, 1, 1),
    ("cnn block2 s2", 64, 16, 16, 56, 3, 2, 1),
    ("cnn block5   ", 64, 16, 32, 14, 3, 1, 1),
    ("chan block1  ", 576, 1, 16, 56, 3, 1, 1),   # 9 channels x batch 64
    ("chan block3  ", 576, 16, 32, 28, 3, 1, 1),
]


def bench_one(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    backends = ["python"] + (["compiled"] if backend.HAVE_COMPILED else [])
    print(f"available backends: {backends} "
          f"(default: {backend.BACKEND_NAME})")
    header = f"{'shape':<14} {'dir':<8}" + "".join(
        f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))

    rng = np.random.default_rng(0)
    for label, bsz, cin, cout, size, k, stride, padding in SHAPES:
        x = rng.standard_normal((bsz, cin, size, size)).astype(np.float32)
        w = rng.standard_normal((cout, cin, k, k)).astype(np.float32)
        b = rng.standard_normal(cout).astype(np.float32)
        y = backend.conv2d_forward(x, w, b, stride, padding)
        gy = rng.standard_normal(y.shape).astype(np.float32)

        fwd, bwd = [], []
        for name in backends:
            fwd.append(bench_one(
                lambda n=name: backend.conv2d_forward(
                    x, w, b, stride, padding, force=n), args.repeats))
            bwd.append(bench_one(
                lambda n=name: backend.conv2d_backward(
                    gy, x, w, stride, padding, force=n), args.repeats))
        print(f"{label:<14} {'forward':<8}"
              + "".join(f"{1e3 * t:>10.1f}ms" for t in fwd))
        print(f"{'':<14} {'backward':<8}"
              + "".join(f"{1e3 * t:>10.1f}ms" for t in bwd))


if __name__ == "__main__":
    main()
