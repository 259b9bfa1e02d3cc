"""Query latency at fixed r on repetitive texts of growing length.

A random block is repeated many times, so the number of BWT runs stays
put while n grows.  Count latency should stay flat and locate cost per
occurrence should not grow with n.

    python3 demos/repetitive_benchmark.py --block 1000 --max-n 10000000

Construction walks the text in pure Python: n = 10**7 built in about 40 s
with a 630 MB peak on the development machine, so the default stops at
10**6.
"""

import argparse
import random
import time

from optbwtr import build_index


def timed(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        out = fn()
    return (time.perf_counter() - t0) / reps, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--block", type=int, default=1000, help="block length in bytes")
    ap.add_argument("--max-n", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    block = bytes(rng.choice(b"acgt") for _ in range(args.block))
    patterns = [block[s:s + 12] for s in rng.sample(range(args.block - 12), 20)]

    print(f"{'n':>10} {'r':>7} {'build s':>9} {'count us':>10} {'locate us/occ':>14}")
    copies = 1
    while copies * args.block <= args.max_n:
        raw = block * copies
        t0 = time.perf_counter()
        idx = build_index(raw)
        build = time.perf_counter() - t0
        count_s, _ = timed(lambda: [idx.count(p) for p in patterns], 5)
        t0 = time.perf_counter()
        occ = sum(len(idx.locate(p)) for p in patterns)
        locate_s = time.perf_counter() - t0
        print(f"{idx.n:>10} {idx.r:>7} {build:>9.2f} {count_s / len(patterns) * 1e6:>10.1f} "
              f"{locate_s / occ * 1e6:>14.2f}")
        copies *= 10


if __name__ == "__main__":
    main()
