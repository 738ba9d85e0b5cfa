"""Sizes, nonzero counts and build times of the Imm <-> H transition matrices."""

import argparse
import time

from immaculate.compositions import compositions_of
from immaculate.nsym import TransitionCache


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=8)
    args = ap.parse_args()
    cache = TransitionCache(max_degree=args.max_degree)
    print("n  dim  nnz(Imm->H)  nnz(H->Imm)  max|entry|  seconds")
    for n in range(args.max_degree + 1):
        t = time.perf_counter()
        fwd, inv = cache.imm_to_h(n), cache.h_to_imm(n)
        dt = time.perf_counter() - t
        nnz_f = sum(len(r) for r in fwd.values())
        nnz_i = sum(len(r) for r in inv.values())
        big = max(abs(c) for r in list(fwd.values()) + list(inv.values()) for c in r.values())
        print(f"{n:<2} {len(compositions_of(n)):<4} {nnz_f:<12} {nnz_i:<12} {big:<11} {dt:.3f}")


if __name__ == "__main__":
    main()
