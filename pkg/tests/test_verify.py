import json

import pytest

from socksort.core import canonicalize, enumerate_orderings
from socksort.alignment_free import forbidden_patterns
from socksort.parallel import parallel_map, worker_count
from socksort.sortability import is_foot_sortable
from socksort.verify import (
    VerifyReport,
    all_passed,
    basis_search,
    basis_search_report,
    catalan_number,
    uniform_class_size,
    verify_catalan_bound,
    verify_counting_bound,
    verify_fibonacci,
    verify_forbidden_patterns,
    verify_log_upper,
    verify_ramsey_sampled,
)


def test_report_json_schema():
    rep = VerifyReport("demo", {"n": 1}, 1, 1, True, millis=2.0)
    obj = json.loads(rep.to_json())
    assert set(obj) == {"harness", "params", "expected", "observed", "pass", "millis"}
    rep2 = VerifyReport("demo", {}, 1, 2, False, witness={"x": 1})
    assert json.loads(rep2.to_json())["witness"] == {"x": 1}


class TestFibonacciHarness:
    def test_small(self):
        reports = verify_fibonacci(4)
        assert all_passed(reports)
        assert [r.params["n"] for r in reports] == [2, 3, 4]
        assert [r.expected for r in reports] == [2, 6, 15]
        assert [r.observed for r in reports] == [2, 6, 15]

    def test_budget_guard(self):
        with pytest.raises(ValueError):
            verify_fibonacci(9)


class TestForbiddenHarness:
    def test_all_fourteen_fail_to_sort(self):
        reports = verify_forbidden_patterns()
        assert len(reports) == 14
        assert all_passed(reports)
        assert reports[1].params["sigma"] == "1234"
        assert reports[-1].params["sigma"] == "2143"


class TestCatalanHarness:
    def test_bound_and_injection(self):
        reports = verify_catalan_bound(4)
        assert all_passed(reports)
        by_len = {r.params["length"]: r for r in reports}
        assert by_len[3].expected["max_preimage_le"] == 5
        assert by_len[4].expected["max_preimage_le"] == 14
        assert by_len[1].observed["max_preimage"] == 1

    def test_catalan_numbers(self):
        assert [catalan_number(k) for k in range(7)] == [1, 1, 2, 5, 14, 42, 132]


class TestRamseyHarness:
    def test_exhaustive_mode_small(self):
        (rep,) = verify_ramsey_sampled(3, 1)
        assert rep.passed
        assert rep.params["mode"] == "exhaustive"
        assert rep.params["r_prime"] == 3
        assert rep.observed["violations"] == 0

    def test_sampled_mode_deterministic(self):
        a = verify_ramsey_sampled(3, 2, samples=20, seed=9, inputs=2)[0]
        b = verify_ramsey_sampled(3, 2, samples=20, seed=9, inputs=2)[0]
        assert a.passed and b.passed
        assert a.to_json_obj()["observed"] == b.to_json_obj()["observed"]

    def test_trivial_target_with_two_colors(self):
        (rep,) = verify_ramsey_sampled(2, 2, samples=5, seed=1, inputs=1)
        assert rep.passed  # target has one color: "aa"

    def test_length_budget(self):
        with pytest.raises(ValueError):
            verify_ramsey_sampled(4, 2)  # r' = 24, length 96


class TestCountingHarness:
    def test_exact_small_sizes(self):
        reports = verify_counting_bound([(2, 2), (4, 2)])
        assert all_passed(reports)
        assert reports[0].observed["class_size"] == 3
        assert reports[1].observed["class_size"] == 105

    def test_class_size_matches_enumeration(self):
        for n, r in [(2, 2), (3, 2), (2, 3)]:
            direct = sum(
                1
                for rho in enumerate_orderings(n * r)
                if rho.n_colors == n and rho.is_uniform(r)
            )
            assert uniform_class_size(n, r) == direct

    def test_chain_at_large_point(self):
        (rep,) = verify_counting_bound([(256, 2)])
        assert rep.passed
        assert rep.observed["k"] == 1
        assert rep.observed["chain_checked"] is True

    def test_chain_skipped_when_k_small(self):
        (rep,) = verify_counting_bound([(16, 4)])
        assert rep.passed
        assert rep.observed["k"] == 0
        assert rep.observed["chain_checked"] is False


class TestLogUpperHarness:
    def test_small_run_passes(self):
        reports = verify_log_upper(trials=60, n_max=8, seed=3)
        assert all_passed(reports)
        assert [r.params["n"] for r in reports] == list(range(2, 9))
        assert reports[-1].expected["feet"] == 3

    def test_deterministic(self):
        a = verify_log_upper(trials=30, n_max=4, seed=5)
        b = verify_log_upper(trials=30, n_max=4, seed=5)
        strip = lambda rep: {k: v for k, v in rep.to_json_obj().items() if k != "millis"}
        assert [strip(r) for r in a] == [strip(r) for r in b]

    def test_budget(self):
        with pytest.raises(ValueError):
            verify_log_upper(trials=1, n_max=17)


class TestBasisSearch:
    def test_nothing_below_length_seven(self):
        assert basis_search(6) == []

    def test_length_seven_minimal_non_sortable(self):
        found = basis_search(7)
        words = {f.letters() for f in found}
        assert "abacaba" in words  # three colors suffice for non-sortability
        assert len(found) == 8

    def test_downward_consistency(self):
        for rho in basis_search(7):
            assert not is_foot_sortable(rho)[0]
            for k in range(len(rho)):
                smaller = canonicalize(rho.word[:k] + rho.word[k + 1 :])
                assert is_foot_sortable(smaller)[0]

    def test_forbidden_patterns_appear_only_if_minimal(self):
        found = set(basis_search(8))
        for pattern in forbidden_patterns():
            if len(pattern) > 8:
                continue
            deletions_sortable = all(
                is_foot_sortable(canonicalize(pattern.word[:k] + pattern.word[k + 1 :]))[0]
                for k in range(len(pattern))
            )
            assert (pattern in found) == deletions_sortable

    def test_report_carries_caveat(self):
        rep = basis_search_report(5)
        assert rep.passed
        assert rep.params["minimality"] == "one-deletion"

    def test_guard(self):
        with pytest.raises(ValueError):
            basis_search(11)


class TestParallel:
    def test_serial_default(self, monkeypatch):
        monkeypatch.delenv("SOCKSORT_THREADS", raising=False)
        assert worker_count() == 1

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("SOCKSORT_THREADS", "3")
        assert worker_count() == 3
        monkeypatch.setenv("SOCKSORT_THREADS", "zero")
        with pytest.raises(ValueError):
            worker_count()
        monkeypatch.setenv("SOCKSORT_THREADS", "0")
        with pytest.raises(ValueError):
            worker_count()

    def test_parallel_map_matches_serial(self):
        items = list(range(30))
        assert parallel_map(catalan_number, items, workers=2) == [
            catalan_number(x) for x in items
        ]

    def test_harness_results_worker_independent(self):
        serial = verify_fibonacci(4, workers=1)
        fanned = verify_fibonacci(4, workers=2)
        strip = lambda rep: {k: v for k, v in rep.to_json_obj().items() if k != "millis"}
        assert [strip(r) for r in serial] == [strip(r) for r in fanned]
