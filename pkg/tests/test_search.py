import itertools
import json

import pytest

import ordsemi as o
from ordsemi.commute import explicit_universe, range_universe
from ordsemi.core import CapExceededError

from conftest import all_words


def theorem_oracle(words: list[str], kmin: int, kmax: int):
    """Brute force over strings: (violations, extremal sets)."""
    bad, hits = [], []
    for k in range(kmin, kmax + 1):
        for S in itertools.combinations(words, k):
            if all(x + y == y + x for x, y in itertools.combinations(S, 2)):
                continue
            sq = len({x + y for x in S for y in S})
            if sq < 3 * k - 2:
                bad.append(S)
            elif sq == 3 * k - 2:
                hits.append(list(S))
    return bad, hits


class TestTheoremScan:
    def test_words_len3(self, fm, U3):
        rep = o.exhaustive_theorem_scan(fm, U3, 2, 4)
        bad, hits = theorem_oracle(all_words("ab", 3), 2, 4)
        assert rep.examined == 105 + 455 + 1365 == 1925
        assert rep.violations == 0 == len(bad)
        assert [h["set"] for h in rep.extremal_hits] == hits

    def test_extremal_ab(self, fm, U3):
        rep = o.exhaustive_theorem_scan(fm, U3, 2, 2)
        assert {"set": ["a", "b"], "square_size": 4, "noncommuting": ["a", "b"],
                "annotation": "|S^2| = 4 = 3*2 - 2"} in rep.extremal_hits

    def test_extremal_hits_recompute(self, fm, U3):
        rep = o.exhaustive_theorem_scan(fm, U3, 2, 4)
        for hit in rep.extremal_hits:
            v = o.small_doubling_verdict(fm, hit["set"])
            assert v.square_size == 3 * v.size - 2 and not v.pairwise_commuting

    def test_no_pairs(self, fm):
        U = explicit_universe(fm, ["a"])
        rep = o.exhaustive_theorem_scan(fm, U, 2, 2)
        assert rep.examined == 0 and rep.violations == 0

    def test_cap(self, fm, U3):
        with pytest.raises(CapExceededError):
            o.exhaustive_theorem_scan(fm, U3, 2, 4, cap_enum=1000)

    def test_bad_range(self, fm, U3):
        with pytest.raises(ValueError):
            o.exhaustive_theorem_scan(fm, U3, 1, 3)

    def test_deterministic_and_parallel(self, fm, U3):
        a = json.dumps(o.exhaustive_theorem_scan(fm, U3, 2, 4).to_dict(), sort_keys=True)
        b = json.dumps(o.exhaustive_theorem_scan(fm, U3, 2, 4).to_dict(), sort_keys=True)
        c = json.dumps(o.exhaustive_theorem_scan(fm, U3, 2, 4, jobs=3).to_dict(), sort_keys=True)
        assert a == b == c

    def test_left_zero_violations(self):
        lz = o.left_zero(("p", "q", "r"))
        rep = o.exhaustive_theorem_scan(lz, explicit_universe(lz, lz.carrier), 2, 3)
        assert rep.violations == 4


class TestFreiman:
    def test_nat_add(self):
        N = o.nat_add()
        rep = o.freiman_progression_explorer(N, range_universe(N, 12), 4)
        entry = next(h for h in rep.extremal_hits if h["set"] == [1, 2, 3, 4])
        assert entry["square_size"] == 7
        # a = 1, b = 1 covers 1..4 additively
        assert (entry["a"], entry["b"]) == (1, 1)
        assert rep.violations == 0 and "reading" in rep.details

    def test_powers_of_a(self, fm, U3):
        rep = o.freiman_progression_explorer(fm, U3, 3)
        entry = next(h for h in rep.extremal_hits if h["set"] == ["a", "aa", "aaa"])
        assert entry["square_size"] == 5
        assert (entry["a"], entry["b"]) == ("a", "a")

    def test_out_of_hypothesis_counted(self, fm, U3):
        rep = o.freiman_progression_explorer(fm, U3, 2)
        d = rep.details
        assert d["noncommuting_skipped"] + d["out_of_hypothesis"] + d["covered"] \
            + len(d["uncovered"]) == rep.examined == 105
        # 2-subsets: |S^2| >= 3 > 3*2 - 4, so none is in scope
        assert d["out_of_hypothesis"] + d["noncommuting_skipped"] == 105


class TestCommutingFactorization:
    def test_free_monoid(self, fm, U3):
        rep = o.commuting_factorization_search(fm, U3)
        assert rep.violations == 0 and rep.examined > 0

    def test_left_zero_finds_tuple(self):
        lz = o.left_zero(("p", "q"))
        rep = o.commuting_factorization_search(lz, explicit_universe(lz, lz.carrier))
        # b = p: C(p) = {p}; a = q; xy = pp = p = za with z = p
        assert rep.violations > 0


class TestRandomSuite:
    def test_triangular(self):
        rep = o.randomized_law_suite(o.upper_triangular(3), 300, seed=42)
        assert rep.violations == 0 and rep.examined == 300

    def test_semiring(self, fm):
        K = o.semigroup_semiring(o.nonneg_rationals(), fm)
        rep = o.randomized_law_suite(K, 300, seed=1)
        assert rep.violations == 0

    def test_free_monoid_and_nat(self, fm):
        assert o.randomized_law_suite(fm, 500, seed=0).violations == 0
        assert o.randomized_law_suite(o.nat_add(), 500, seed=0).violations == 0

    def test_single_trial(self, fm):
        a = o.randomized_law_suite(fm, 1, seed=7)
        b = o.randomized_law_suite(fm, 1, seed=7)
        assert a.examined == 1 and a.to_dict() == b.to_dict()

    def test_left_zero_fails(self):
        rep = o.randomized_law_suite(o.left_zero(("p", "q")), 50, seed=0)
        assert rep.violations > 0
        assert "cancellativity" in rep.details["failures_by_law"]

    def test_bad_trials(self, fm):
        with pytest.raises(ValueError):
            o.randomized_law_suite(fm, 0)
