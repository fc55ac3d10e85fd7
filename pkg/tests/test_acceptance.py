"""Acceptance suite: one test per exit criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines and timings. Budgets are asserted where a criterion states one.
"""

import itertools
import random
import time

from socksort.core import enumerate_orderings, is_sorted, parse
from socksort.foot import Move, foot_image, replay
from socksort.alignment_free import (
    forbidden_patterns,
    is_spread_out,
    rho_of,
    spread_out_sorter,
)
from socksort.multifoot import r_of_n, t_foot_image
from socksort.sampling import random_deletion, random_foot_sortable, random_t_foot_sortable
from socksort.sortability import (
    brute_force_oracle,
    is_foot_sortable,
    is_foot_sortable_via_relabeling,
)
from socksort.multifoot import is_t_foot_sortable
from socksort.verify import (
    all_passed,
    verify_catalan_bound,
    verify_counting_bound,
    verify_fibonacci,
    verify_log_upper,
    verify_ramsey_sampled,
)

SEED = 20230818


def _criterion(num: int, name: str, passed: bool, elapsed: float, budget: float | None = None):
    status = "PASS" if passed else "FAIL"
    print(f"ACCEPTANCE {num:02d} {name}: {status} ({elapsed:.1f}s)")
    assert passed, f"criterion {num} ({name}) failed"
    if budget is not None:
        assert elapsed < budget, f"criterion {num} took {elapsed:.1f}s, budget {budget}s"


def test_01_decider_agreement_lengths_7_and_8():
    t0 = time.perf_counter()
    ok = True
    for length in (7, 8):
        for rho in enumerate_orderings(length):
            search = is_foot_sortable(rho)[0]
            brute = brute_force_oracle(rho)
            agree = search == brute
            if rho.n_colors <= 10:
                agree = agree and search == is_foot_sortable_via_relabeling(rho)
            ok = ok and agree
    elapsed = time.perf_counter() - t0
    _criterion(1, "three deciders agree on all 877+4140 orderings", ok, elapsed, 60.0)


def test_02_fibonacci_counts_to_n8():
    t0 = time.perf_counter()
    reports = verify_fibonacci(8)
    expected = [2, 6, 15, 32, 65, 126, 238]
    ok = all_passed(reports) and [r.observed for r in reports] == expected
    elapsed = time.perf_counter() - t0
    _criterion(2, "sortable alignment-free counts equal (n-1)F(n+1)", ok, elapsed, 300.0)


def test_03_fourteen_forbidden_patterns():
    t0 = time.perf_counter()
    pats = forbidden_patterns()
    ok = len(pats) == 14 and not any(is_foot_sortable(rho)[0] for rho in pats)
    elapsed = time.perf_counter() - t0
    _criterion(3, "all 14 obstructions decide non-sortable", ok, elapsed, 1.0)


def test_04_spread_out_characterization_to_n7():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 8):
        for sigma in itertools.permutations(range(1, n + 1)):
            if is_spread_out(sigma) != is_foot_sortable(rho_of(sigma))[0]:
                ok = False
    elapsed = time.perf_counter() - t0
    _criterion(4, "spread-out iff sortable for all sigma, n<=7", ok, elapsed)


def test_05_constructive_sorter_to_n8():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 9):
        for sigma in itertools.permutations(range(1, n + 1)):
            if not is_spread_out(sigma):
                continue
            rho = rho_of(sigma)
            if not is_sorted(replay(rho, spread_out_sorter(rho))):
                ok = False
    for text, early in (("abcdefgcfgebda", 3), ("abcdefggbfdeac", 2)):
        rho = parse(text)
        cert = spread_out_sorter(rho)
        first_pop = next(i for i, m in enumerate(cert.moves) if m is Move.POP)
        ok = ok and rho.word[first_pop - 1] == early
        ok = ok and is_sorted(replay(rho, cert))
    elapsed = time.perf_counter() - t0
    _criterion(5, "spread-out sorter certificates replay sorted, n<=8", ok, elapsed)


def test_06_log_upper_bound_ten_thousand_runs():
    t0 = time.perf_counter()
    reports = verify_log_upper(trials=10_000, n_max=16, seed=SEED)
    total = sum(r.params["trials"] for r in reports)
    ok = all_passed(reports) and total >= 9_000
    elapsed = time.perf_counter() - t0
    _criterion(6, "halving sorter: exact feet on 10^4 random orderings", ok, elapsed, 60.0)


def test_07_catalan_preimage_bound_to_length_5():
    t0 = time.perf_counter()
    reports = verify_catalan_bound(5)
    ok = all_passed(reports)
    ok = ok and reports[-1].expected["max_preimage_le"] == 42
    elapsed = time.perf_counter() - t0
    _criterion(7, "preimage sizes within Catalan, injection holds", ok, elapsed, 300.0)


def test_08_two_feet_equal_composed_images():
    t0 = time.perf_counter()
    ok = True
    for length in range(6):
        for rho in enumerate_orderings(length):
            composed = set()
            for mid in foot_image(rho):
                composed |= foot_image(mid).orderings
            if t_foot_image(rho, 2) != frozenset(composed):
                ok = False
    elapsed = time.perf_counter() - t0
    _criterion(8, "two-foot outputs equal image-of-image, length<=5", ok, elapsed)


def test_09_ramsey_stratified_core():
    t0 = time.perf_counter()
    exhaustive = verify_ramsey_sampled(3, 1)
    sampled = verify_ramsey_sampled(3, 2, samples=1_000, seed=SEED, inputs=10)
    ok = (
        all_passed(exhaustive)
        and exhaustive[0].params["mode"] == "exhaustive"
        and all_passed(sampled)
        and sampled[0].observed["runs"] == 10_000
    )
    elapsed = time.perf_counter() - t0
    _criterion(9, "stratified core survives the foot (exhaustive + sampled)", ok, elapsed)


def test_10_counting_bound_arithmetic():
    t0 = time.perf_counter()
    reports = verify_counting_bound([(2, 2), (4, 2), (256, 2), (16, 4)])
    by_point = {(r.params["n"], r.params["r"]): r for r in reports}
    ok = all_passed(reports)
    ok = ok and by_point[(2, 2)].observed["class_size"] == 3
    ok = ok and by_point[(4, 2)].observed["class_size"] == 105
    ok = ok and by_point[(256, 2)].observed["chain_checked"]
    ok = ok and [r_of_n(n) for n in (2, 3, 4, 5)] == [2, 12, 24, 1440]
    elapsed = time.perf_counter() - t0
    _criterion(10, "class sizes and power chain by exact arithmetic", ok, elapsed, 1.0)


def test_11_closure_under_containment():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    ok = True
    for _ in range(10_000):
        rho = random_foot_sortable(rng, rng.randint(2, 12))
        if len(rho) < 2:
            continue
        pi = random_deletion(rng, rho)
        if not is_foot_sortable(pi)[0]:
            ok = False
    for _ in range(1_000):
        rho = random_t_foot_sortable(rng, rng.randint(2, 10), 2)
        pi = random_deletion(rng, rho)
        if not is_t_foot_sortable(pi, 2)[0]:
            ok = False
    elapsed = time.perf_counter() - t0
    _criterion(11, "deleting socks preserves sortability (t=1 and t=2)", ok, elapsed)
