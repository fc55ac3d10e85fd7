import random

import pytest

from socksort.core import SockOrdering, canonicalize, enumerate_orderings, parse
from socksort.foot import (
    Certificate,
    InvalidCertificateError,
    Move,
    certificate_from_dyck,
    dyck_encode,
    foot_image,
    foot_preimage,
    replay,
    transform_certificate,
)

from oracles import all_dyck_words, naive_image

FIG_RUN_DYCK = "UUDUUDUDDUUDDD"  # a published 7-sock run


class TestCertificate:
    def test_validates_counts(self):
        with pytest.raises(InvalidCertificateError):
            Certificate(n=2, moves=(Move.PUSH, Move.POP))

    def test_validates_prefix_balance(self):
        with pytest.raises(InvalidCertificateError) as exc:
            Certificate(n=1, moves=(Move.POP, Move.PUSH))
        assert exc.value.index == 0

    def test_json_roundtrip(self):
        cert = certificate_from_dyck("UUDD")
        again = Certificate.from_json(cert.to_json())
        assert again == cert
        assert '"n": 2' in cert.to_json()

    def test_json_rejects_garbage(self):
        with pytest.raises(InvalidCertificateError):
            Certificate.from_json("{not json")
        with pytest.raises(InvalidCertificateError):
            Certificate.from_json('{"n": 1, "moves": ["U", "X"]}')


class TestReplay:
    def test_sorts_abab_by_hand_schedule(self):
        # push a, pop a, push b, push a, pop a, pop b, push b, pop b
        cert = certificate_from_dyck("UDUUDDUD")
        assert replay(parse("abab"), cert) == parse("aabb")

    def test_published_seven_sock_run_shape(self):
        cert = certificate_from_dyck(FIG_RUN_DYCK)
        assert cert.n == 7
        out = replay(parse("abcdefg"), cert)
        assert len(out) == 7

    def test_single_sock_identity(self):
        assert replay(parse("a"), certificate_from_dyck("UD")) == parse("a")

    def test_length_mismatch_errors(self):
        cert = certificate_from_dyck("UUDD")
        with pytest.raises(InvalidCertificateError) as exc:
            replay(parse("a"), cert)  # push past end
        assert exc.value.index == 1
        with pytest.raises(InvalidCertificateError):
            replay(parse("abc"), cert)  # leftover input

    def test_conserves_multiset(self):
        rng = random.Random(5)
        for _ in range(100):
            length = rng.randint(1, 8)
            rho = canonicalize([rng.randint(1, 4) for _ in range(length)])
            dyck = rng.choice(list(all_dyck_words(len(rho))))
            out = replay(rho, certificate_from_dyck(dyck))
            assert sorted(out.multiplicities().values()) == sorted(
                rho.multiplicities().values()
            )


class TestDyckEncode:
    @pytest.mark.parametrize("word", ["UD", "UUDD", FIG_RUN_DYCK])
    def test_roundtrip(self, word):
        assert dyck_encode(certificate_from_dyck(word)) == word

    def test_prefix_property_of_any_certificate(self):
        depth = 0
        for ch in dyck_encode(certificate_from_dyck(FIG_RUN_DYCK)):
            depth += 1 if ch == "U" else -1
            assert depth >= 0
        assert depth == 0


class TestFootImage:
    def test_two_socks_collapse(self):
        assert {s.word for s in foot_image(parse("ab"))} == {(1, 2)}

    def test_abab_reaches_sorted(self):
        assert parse("aabb") in foot_image(parse("abab"))

    def test_matches_dyck_enumeration_oracle(self):
        for text in ("abab", "abcabc", "aabbc", "abcba"):
            rho = parse(text)
            expected = naive_image(rho.word)
            got = {s.word for s in foot_image(rho)}
            assert got == expected

    def test_members_are_canonical(self):
        for out in foot_image(parse("abcab")):
            assert isinstance(out, SockOrdering)  # constructor enforces canonical form

    def test_cap_flags_truncation(self):
        res = foot_image(parse("abcabc"), cap=2)
        assert res.truncated and len(res) == 2
        full = foot_image(parse("abcabc"))
        assert not full.truncated
        assert res.orderings <= full.orderings


class TestFootPreimage:
    def test_abab_reaches_aabb(self):
        assert parse("abab") in foot_preimage(parse("aabb"))

    def test_single_sock(self):
        assert {s.word for s in foot_preimage(parse("a"))} == {(1,)}

    def test_catalan_bound_length_3(self):
        for rho in enumerate_orderings(3):
            assert len(foot_preimage(rho)) <= 5

    def test_forward_backward_agree(self):
        # kappa in preimage(rho) iff rho in image(kappa), exhaustively at length 4
        pre = {rho.word: {k.word for k in foot_preimage(rho)} for rho in enumerate_orderings(4)}
        for kappa in enumerate_orderings(4):
            for rho in foot_image(kappa):
                assert kappa.word in pre[rho.word]


class TestTransformCertificate:
    def test_roundtrip_over_preimages(self):
        for length in range(1, 5):
            for rho in enumerate_orderings(length):
                for kappa in foot_preimage(rho):
                    cert = transform_certificate(kappa, rho)
                    assert cert is not None
                    assert replay(kappa, cert) == rho

    def test_dyck_words_injective_per_target(self):
        for length in range(1, 6):
            for rho in enumerate_orderings(length):
                pre = foot_preimage(rho)
                dycks = {dyck_encode(transform_certificate(k, rho)) for k in pre}
                assert len(dycks) == len(pre)

    def test_unreachable_returns_none(self):
        # runs permute socks but preserve the multiplicity profile
        assert transform_certificate(parse("aabb"), parse("abbb")) is None
        assert transform_certificate(parse("ab"), parse("aa")) is None
        assert transform_certificate(parse("ab"), parse("abc")) is None
