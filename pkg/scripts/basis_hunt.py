#!/usr/bin/env python3
"""Hunt for minimal non-sortable orderings, length by length.

Usage: python scripts/basis_hunt.py [--l-max 10]

Prints each ordering that is not foot-sortable although every one-sock
deletion is, together with per-length counts. Minimality here is under
single deletion only, so the output is a superset of true basis elements.
"""

import argparse
import sys
import time
from collections import Counter

from socksort.core import canonicalize, enumerate_orderings
from socksort.sortability import is_foot_sortable


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--l-max", type=int, default=10)
    args = ap.parse_args()

    decided = {}

    def sortable(rho):
        hit = decided.get(rho)
        if hit is None:
            hit = is_foot_sortable(rho)[0]
            decided[rho] = hit
        return hit

    per_length = Counter()
    t0 = time.time()
    for length in range(1, args.l_max + 1):
        t_len = time.time()
        for rho in enumerate_orderings(length):
            if sortable(rho):
                continue
            deletions = {
                canonicalize(rho.word[:k] + rho.word[k + 1 :]) for k in range(length)
            }
            if all(sortable(d) for d in deletions):
                per_length[length] += 1
                print(f"{rho}   colors={rho.n_colors}")
        print(
            f"-- length {length}: {per_length[length]} minimal,"
            f" {time.time() - t_len:.1f}s",
            file=sys.stderr,
        )
    print(f"total {sum(per_length.values())} in {time.time() - t0:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
