#!/usr/bin/env python3
"""Run every verification harness at desk scale and write a JSON-lines report.

Usage: python scripts/run_verification.py [--quick] [--out reports.jsonl]

The full run reproduces the quantitative claims end to end (a few minutes);
--quick shrinks the exhaustive sweeps for a fast smoke pass.
"""

import argparse
import sys
import time

from socksort.parallel import worker_count
from socksort.verify import (
    all_passed,
    basis_search_report,
    verify_catalan_bound,
    verify_counting_bound,
    verify_fibonacci,
    verify_forbidden_patterns,
    verify_log_upper,
    verify_ramsey_sampled,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--quick", action="store_true", help="smaller sweeps, ~seconds")
    ap.add_argument("--out", default=None, help="write JSON lines here as well")
    ap.add_argument("--seed", type=int, default=20230818)
    args = ap.parse_args()

    workers = worker_count()
    quick = args.quick
    t0 = time.time()
    batches = [
        ("fibonacci counts", lambda: verify_fibonacci(6 if quick else 8, workers=workers)),
        ("forbidden patterns", verify_forbidden_patterns),
        ("catalan preimages", lambda: verify_catalan_bound(4 if quick else 6, workers=workers)),
        ("ramsey exhaustive", lambda: verify_ramsey_sampled(3, 1)),
        (
            "ramsey sampled",
            lambda: verify_ramsey_sampled(
                3, 2, samples=100 if quick else 1000, seed=args.seed, inputs=3 if quick else 10
            ),
        ),
        (
            "counting bound",
            lambda: verify_counting_bound([(2, 2), (4, 2), (16, 4), (64, 2), (256, 2), (1024, 2)]),
        ),
        (
            "log upper bound",
            lambda: verify_log_upper(trials=1000 if quick else 10_000, n_max=16, seed=args.seed),
        ),
        ("basis search", lambda: [basis_search_report(7 if quick else 9)]),
    ]

    lines = []
    ok = True
    for label, runner in batches:
        reports = runner()
        ok = ok and all_passed(reports)
        flag = "ok" if all_passed(reports) else "FAILED"
        print(f"[{flag}] {label}: {len(reports)} report(s)", file=sys.stderr)
        lines.extend(r.to_json() for r in reports)

    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(lines)} reports to {args.out}", file=sys.stderr)
    else:
        print(text)
    print(f"total {time.time() - t0:.1f}s, all passed: {ok}", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
