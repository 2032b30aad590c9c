#!/usr/bin/env python
"""Compare the numba and numpy kernels on encode and decode.

    python benchmarks/bench_backends.py [--n 1000000] [--repeat 3]

Both backends run in one process through the ``backend=`` argument. The
``APFC_NO_NUMBA=1`` flag only changes the default. Every run also checks
that both backends give bit-identical payloads and exact roundtrips.
"""
import argparse
import time

import numpy as np

from apfc import decode_stream, encode_stream
from apfc.kernels import BACKENDS
from apfc.model import empirical_entropy


def timer(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def make(kind, sigma, n, rng):
    if kind == "uniform":
        return rng.integers(0, sigma, n)
    if kind == "zipf":
        w = 1.0 / np.arange(1, sigma + 1)
        return rng.choice(sigma, size=n, p=w / w.sum())
    return np.where(rng.random(n) < 0.9, 0, rng.integers(1, sigma, n))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    # compile outside the timings
    warm = rng.integers(0, 4, 5000)
    decode_stream(encode_stream(warm, 4, backend="numba"), 4, len(warm), backend="numba")

    print(f"{'sigma':>5} {'data':>8} {'mode':>10} {'H':>6} {'bits/sym':>8} "
          + " ".join(f"{b + ' enc':>10} {b + ' dec':>10}" for b in BACKENDS) + "  Msym/s(numba dec)")
    for sigma in (4, 64, 256):
        for kind in ("uniform", "zipf", "skew90"):
            s = make(kind, sigma, args.n, rng)
            H = empirical_entropy(np.bincount(s, minlength=sigma), args.n)
            for mode in ("shannon", "alphabetic"):
                cells = []
                payloads = {}
                for name in BACKENDS:
                    te, p = timer(lambda: encode_stream(s, sigma, mode, backend=name), args.repeat)
                    td, d = timer(lambda: decode_stream(p, sigma, args.n, mode, backend=name), args.repeat)
                    assert np.array_equal(d, s), (name, sigma, kind, mode)
                    payloads[name] = p
                    cells.append((te, td))
                assert len(set(payloads.values())) == 1, "backends disagree"
                rate = args.n / cells[0][1] / 1e6
                print(f"{sigma:>5} {kind:>8} {mode:>10} {H:6.3f} {p.nbits / args.n:8.3f} "
                      + " ".join(f"{te:9.3f}s {td:9.3f}s" for te, td in cells) + f"  {rate:8.1f}")


if __name__ == "__main__":
    main()
