import itertools

import pytest

import ordsemi as o
from ordsemi import Ordering
from ordsemi.core import check_associativity, check_total_order

from conftest import all_words, shortlex_key


class TestCompare:
    def test_shorter_word_first(self, fm):
        assert o.compare(fm, "b", "aa") == Ordering.LT

    def test_reflexive(self, fm):
        for x in ["", "a", "abba"]:
            assert o.compare(fm, x, x) == Ordering.EQ

    def test_equal_length_lexicographic(self, fm):
        assert o.compare(fm, "ab", "ba") == Ordering.LT

    def test_matches_string_oracle(self, fm):
        words = all_words("ab", 3)
        for x, y in itertools.product(words, repeat=2):
            want = Ordering.of(shortlex_key(x), shortlex_key(y))
            assert o.compare(fm, x, y) == want

    @pytest.mark.parametrize("bad", ["abc", "A", (0, 2)])
    def test_domain_mismatch(self, fm, bad):
        with pytest.raises(o.DomainError):
            o.compare(fm, bad, "a")

    def test_malformed_rational(self):
        K = o.nonneg_rationals()
        with pytest.raises(o.DomainError):
            o.compare(K, "1/x", "1")
        with pytest.raises(o.DomainError):
            o.compare(K, "1/0", "1")


class TestOrderLaws:
    def test_free_monoid_translation_small(self, fm):
        rep = o.check_order_laws(fm, all_words("ab", 2), "translation")
        assert rep.failures == 0 and rep.witness is None
        # 7 words give C(7,2) strict pairs times 7 multipliers
        assert rep.trials == 21 * 7

    def test_free_monoid_translation_len3(self, fm):
        rep = o.check_order_laws(fm, all_words("ab", 3), "translation")
        assert rep.failures == 0
        assert rep.trials == 105 * 15

    @pytest.mark.parametrize("carrier", [("p", "q"), ("q", "p")])
    def test_left_zero_any_comparator_fails(self, carrier):
        lz = o.left_zero(carrier)
        rep = o.check_order_laws(lz, carrier, "translation")
        assert rep.failures > 0 and rep.witness is not None
        a, b, c = rep.witness
        assert lz.cmp(a, b) == Ordering.LT
        assert lz.op(c, a) == lz.op(c, b)

    def test_singleton_powers(self, fm):
        rep = o.check_order_laws(fm, ["ab"], "powers")
        assert rep.failures == 0 and rep.trials == 0

    def test_powers_free_monoid(self, fm):
        rep = o.check_order_laws(fm, all_words("ab", 2), "powers")
        assert rep.failures == 0 and rep.trials == 21

    def test_idempotent_power_vacuous_on_free_monoid(self, fm):
        rep = o.check_order_laws(fm, all_words("ab", 2), "idempotent-power")
        assert rep.trials == 0 and rep.failures == 0

    def test_empty_sample(self, fm):
        with pytest.raises(o.EmptySampleError):
            o.check_order_laws(fm, [], "translation")

    def test_unknown_mode(self, fm):
        with pytest.raises(ValueError):
            o.check_order_laws(fm, ["a"], "sideways")

    def test_random_sampling_above_threshold(self, fm):
        sample = all_words("ab", 4)
        assert len(sample) > 20
        rep = o.check_order_laws(fm, sample, "translation", trials=500, seed=3)
        again = o.check_order_laws(fm, sample, "translation", trials=500, seed=3)
        assert rep.failures == 0 and rep == again
        assert 0 < rep.trials <= 500

    def test_semiring_skips_zero_multiplier(self):
        K = o.nonneg_rationals()
        rep = o.check_order_laws(K, ["0", "1/2", "1", "3"], "translation")
        assert rep.failures == 0


class TestCancellativity:
    def test_free_monoid(self, fm):
        rep = o.check_cancellativity(fm, all_words("ab", 2))
        assert rep.failures == 0 and rep.trials == 7**3

    def test_left_zero_witness(self):
        lz = o.left_zero(("p", "q"))
        rep = o.check_cancellativity(lz, ["p", "q"])
        assert rep.witness == ("p", "p", "q")
        assert lz.op("p", "p") == lz.op("p", "q") == "p"

    def test_singleton(self, fm):
        rep = o.check_cancellativity(fm, ["ab"])
        assert rep.failures == 0 and rep.trials == 1

    def test_empty(self, fm):
        with pytest.raises(o.EmptySampleError):
            o.check_cancellativity(fm, [])


def test_associativity_and_total_order(fm):
    words = all_words("ab", 2)
    assert check_associativity(fm, words).failures == 0
    assert check_total_order(fm, words).failures == 0


def test_law_report_dict_renders_witness():
    lz = o.left_zero(("p", "q"))
    d = o.check_cancellativity(lz, ["p", "q"]).to_dict(lz)
    assert d["witness"] == ["p", "p", "q"] and d["failures"] > 0
