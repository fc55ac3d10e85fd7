"""Command line: decide, sort, replay, contains, enumerate, generate, verify.

Exit codes: 0 success or affirmative decision, 1 negative decision,
2 usage, parse, or resource error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import BudgetExceeded, ParseError, SockOrdering, contains, enumerate_orderings, is_sorted, parse
from .foot import Certificate, InvalidCertificateError, replay
from .multifoot import CertificateT, t_replay, tarjan_sort
from .alignment_free import sigma_of, is_spread_out, spread_out_sorter
from .parallel import worker_count
from .sampling import random_alignment_free, random_stratified
from .sortability import is_foot_sortable
from .multifoot import is_t_foot_sortable
from . import verify as verify_mod

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="socksort",
        description="Foot-sorting machines for sock orderings.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decide", help="decide t-foot sortability")
    d.add_argument("ordering")
    d.add_argument("--feet", type=int, default=1, metavar="T")
    d.add_argument("--certificate", metavar="PATH", help="write the certificate JSON here")
    d.add_argument("--node-budget", type=int, default=10**7)

    s = sub.add_parser("sort", help="produce a sorting certificate")
    s.add_argument("ordering")
    s.add_argument("--method", choices=("search", "tarjan", "spreadout"), default="search")
    s.add_argument("--out", metavar="PATH", help="write the certificate JSON here instead of stdout")
    s.add_argument("--node-budget", type=int, default=10**7)

    r = sub.add_parser("replay", help="replay a certificate against an ordering")
    r.add_argument("ordering")
    r.add_argument("--certificate", required=True, metavar="PATH")
    r.add_argument("--letters", action="store_true")

    c = sub.add_parser("contains", help="pattern containment between two orderings")
    c.add_argument("host")
    c.add_argument("pattern")

    e = sub.add_parser("enumerate", help="list canonical orderings of a length")
    e.add_argument("--length", type=int, required=True)
    e.add_argument("--foot-sortable", action="store_true", help="keep only sortable ones")
    e.add_argument("--letters", action="store_true")

    g = sub.add_parser("generate", help="generate a random ordering")
    mode = g.add_mutually_exclusive_group(required=True)
    mode.add_argument("--stratified", nargs=2, type=int, metavar=("N", "R"))
    mode.add_argument("--alignment-free", type=int, metavar="N")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--letters", action="store_true")

    v = sub.add_parser("verify", help="run a verification harness (JSON lines)")
    v.add_argument(
        "harness",
        choices=("fib", "patterns", "catalan", "ramsey", "logupper", "counting", "basis"),
    )
    v.add_argument("--n-max", type=int)
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--r", type=int, default=1)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--inputs", type=int, default=10)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--l-max", type=int, default=8)
    v.add_argument(
        "--points",
        nargs="*",
        metavar="N,R",
        help="grid for the counting harness, e.g. 2,2 4,2 256,2 16,4",
    )
    v.add_argument("--out", metavar="PATH")
    return p


def _emit_ordering(rho: SockOrdering, letters: bool) -> str:
    return rho.letters() if letters else str(rho)


def _cmd_decide(args) -> int:
    rho = parse(args.ordering)
    if args.feet < 1:
        print("error: --feet must be >= 1", file=sys.stderr)
        return EXIT_ERROR
    if args.feet == 1:
        ok, cert = is_foot_sortable(rho, node_budget=args.node_budget)
    else:
        ok, cert = is_t_foot_sortable(rho, args.feet, node_budget=args.node_budget)
    if not ok:
        print(f"not {args.feet}-foot-sortable" if args.feet > 1 else "not foot-sortable")
        return EXIT_NEGATIVE
    print(f"{args.feet}-foot-sortable" if args.feet > 1 else "foot-sortable")
    if args.certificate:
        with open(args.certificate, "w") as fh:
            fh.write(cert.to_json() + "\n")
        print(f"certificate written to {args.certificate}", file=sys.stderr)
    return EXIT_OK


def _cmd_sort(args) -> int:
    rho = parse(args.ordering)
    if args.method == "search":
        ok, cert = is_foot_sortable(rho, node_budget=args.node_budget)
        if not ok:
            print("not foot-sortable: no certificate exists", file=sys.stderr)
            return EXIT_NEGATIVE
        result = replay(rho, cert)
    elif args.method == "tarjan":
        cert = tarjan_sort(rho)
        result = t_replay(rho, cert)
    else:
        sigma = sigma_of(rho)
        if not is_spread_out(sigma):
            print("error: ordering is not spread-out", file=sys.stderr)
            return EXIT_ERROR
        cert = spread_out_sorter(rho)
        result = replay(rho, cert)
    assert is_sorted(result)
    text = cert.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _cmd_replay(args) -> int:
    rho = parse(args.ordering)
    with open(args.certificate) as fh:
        text = fh.read()
    try:
        head = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidCertificateError(f"certificate is not valid JSON: {e}")
    if isinstance(head, dict) and "t" in head:
        out = t_replay(rho, CertificateT.from_json(text))
    else:
        out = replay(rho, Certificate.from_json(text))
    print(_emit_ordering(out, args.letters))
    return EXIT_OK


def _cmd_contains(args) -> int:
    host = parse(args.host)
    pattern = parse(args.pattern)
    if contains(host, pattern):
        print("contains")
        return EXIT_OK
    print("avoids")
    return EXIT_NEGATIVE


def _cmd_enumerate(args) -> int:
    if args.length < 0:
        print("error: --length must be >= 0", file=sys.stderr)
        return EXIT_ERROR
    for rho in enumerate_orderings(args.length):
        if args.foot_sortable and not is_foot_sortable(rho)[0]:
            continue
        print(_emit_ordering(rho, args.letters))
    return EXIT_OK


def _cmd_generate(args) -> int:
    import random

    rng = random.Random(args.seed)
    print(f"seed: {args.seed}", file=sys.stderr)
    if args.stratified:
        n, r = args.stratified
        if n < 1 or r < 1:
            print("error: --stratified needs N >= 1 and R >= 1", file=sys.stderr)
            return EXIT_ERROR
        rho = random_stratified(rng, n, r)
    else:
        if args.alignment_free < 1:
            print("error: --alignment-free needs N >= 1", file=sys.stderr)
            return EXIT_ERROR
        rho = random_alignment_free(rng, args.alignment_free)
    print(_emit_ordering(rho, args.letters))
    return EXIT_OK


def _cmd_verify(args) -> int:
    workers = worker_count()
    if args.harness == "fib":
        reports = verify_mod.verify_fibonacci(args.n_max or 6, workers=workers)
    elif args.harness == "patterns":
        reports = verify_mod.verify_forbidden_patterns()
    elif args.harness == "catalan":
        reports = verify_mod.verify_catalan_bound(args.n_max or 5, workers=workers)
    elif args.harness == "ramsey":
        reports = verify_mod.verify_ramsey_sampled(
            args.n, args.r, samples=args.samples, seed=args.seed, inputs=args.inputs
        )
    elif args.harness == "logupper":
        reports = verify_mod.verify_log_upper(
            trials=args.trials, n_max=args.n_max or 16, seed=args.seed
        )
    elif args.harness == "counting":
        points = []
        for item in args.points or ["2,2", "4,2", "256,2", "16,4"]:
            n_str, _, r_str = item.partition(",")
            points.append((int(n_str), int(r_str)))
        reports = verify_mod.verify_counting_bound(points)
    else:
        reports = [verify_mod.basis_search_report(args.l_max)]
    lines = "\n".join(r.to_json() for r in reports)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(lines + "\n")
    else:
        print(lines)
    return EXIT_OK if verify_mod.all_passed(reports) else EXIT_NEGATIVE


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code not in (0, None) else EXIT_OK
    handlers = {
        "decide": _cmd_decide,
        "sort": _cmd_sort,
        "replay": _cmd_replay,
        "contains": _cmd_contains,
        "enumerate": _cmd_enumerate,
        "generate": _cmd_generate,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except InvalidCertificateError as e:
        print(f"certificate error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as e:
        print(f"resource error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
