import itertools

import pytest

import ordsemi as o
from ordsemi.core import CapExceededError, InvariantViolation
from ordsemi.products import FiniteSubset, power_set

from conftest import all_words


def brute_product(*sets):
    """Oracle on words written as strings."""
    return sorted({"".join(t) for t in itertools.product(*sets)}, key=lambda s: (len(s), s))


class TestProductSet:
    def test_nat_add(self):
        N = o.nat_add()
        S = o.product_set(N, [[1, 2, 3], [1, 2, 3]])
        assert list(S) == [2, 3, 4, 5, 6]

    def test_free_monoid(self, fm):
        S = o.product_set(fm, [["a", "b"], ["a", "b"]])
        assert S.render() == ["aa", "ab", "ba", "bb"]

    def test_single_factor(self, fm):
        assert o.product_set(fm, [["ab"]]).render() == ["ab"]

    def test_matches_oracle(self, fm):
        sets = [["", "a", "ab"], ["b", "ba"], ["a", "aa", "b"]]
        assert o.product_set(fm, sets).render() == brute_product(*sets)

    def test_empty_list(self, fm):
        with pytest.raises(o.EmptySampleError):
            o.product_set(fm, [])

    def test_empty_member(self, fm):
        with pytest.raises(o.EmptySampleError):
            o.product_set(fm, [["a"], []])

    def test_instance_mismatch(self, fm):
        S = FiniteSubset(o.free_monoid(3), ["c"])
        with pytest.raises(ValueError):
            o.product_set(fm, [S])

    def test_cap(self, fm):
        words = all_words("ab", 4)
        with pytest.raises(CapExceededError):
            o.product_set(fm, [words, words], cap=50)

    def test_dedup_and_sort(self, fm):
        S = FiniteSubset(fm, ["b", "a", "b", ""])
        assert S.render() == ["", "a", "b"]


class TestSuperadditivity:
    def test_nat_add(self):
        assert tuple(o.superadditivity_check(o.nat_add(), [[1, 2], [1, 2, 3]])) == (4, 4, True)

    def test_free_monoid_slack(self, fm):
        assert tuple(o.superadditivity_check(fm, [["a", "b"], ["a", "b"]])) == (3, 4, True)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_singletons(self, fm, n):
        assert tuple(o.superadditivity_check(fm, [["ab"]] * n)) == (1, 1, True)


class TestSharpness:
    def test_two_factors(self, fm):
        sets = o.sharpness_witness(fm, "a", [3, 3])
        prod = o.product_set(fm, sets)
        assert prod.render() == ["aa", "aaa", "aaaa", "aaaaa", "aaaaaa"]
        assert len(prod) == 1 - 2 + 6

    def test_nat_single(self):
        sets = o.sharpness_witness(o.nat_add(), 1, [4])
        assert [list(s) for s in sets] == [[1, 2, 3, 4]]

    def test_ab_three_factors(self, fm):
        sets = o.sharpness_witness(fm, "ab", [2, 2, 2])
        assert len(o.product_set(fm, sets)) == 4

    def test_zero_size(self, fm):
        with pytest.raises(ValueError):
            o.sharpness_witness(fm, "a", [2, 0])

    def test_periodic_element_detected(self, fm):
        with pytest.raises(InvariantViolation):
            o.sharpness_witness(fm, "", [2])

    def test_power_set(self, fm):
        assert power_set(fm, "ab", 3).render() == ["ab", "abab", "ababab"]


class TestTranslates:
    def test_disjoint_example(self, fm):
        d = o.disjointness_check(fm, ["a", "aa"], "b")
        assert d.disjoint and len(d.intersection) == 0

    def test_y_centralizes(self, fm):
        with pytest.raises(o.PreconditionError):
            o.disjointness_check(fm, ["a"], "a")

    def test_noncommuting_S(self, fm):
        with pytest.raises(o.PreconditionError):
            o.disjointness_check(fm, ["a", "b"], "ab")

    def test_powers_of_ab(self, fm):
        assert o.disjointness_check(fm, ["ab", "abab"], "a").disjoint

    def test_union_bound(self, fm):
        assert tuple(o.union_bound_check(fm, ["a", "aa"], "b")) == (6, 7, True)
        assert tuple(o.union_bound_check(fm, ["a"], "b")) == (3, 3, True)

    def test_union_bound_precondition(self, fm):
        with pytest.raises(o.PreconditionError):
            o.union_bound_check(fm, ["a", "aa"], "aaa")

    def test_union_oracle(self, fm):
        S, y = ["a", "aa"], "b"
        sq = {x + z for x in S for z in S}
        tr = {y + s for s in S} | {s + y for s in S}
        assert sq == {"aa", "aaa", "aaaa"} and tr == {"ba", "baa", "ab", "aab"}
        assert len(sq | tr) == 7


class TestVerdict:
    def test_free_monoid_ab(self, fm):
        v = o.small_doubling_verdict(fm, ["a", "b"])
        assert (v.size, v.square_size) == (2, 4)
        assert not v.pairwise_commuting and not v.bound_satisfied
        assert v.theorem_consistent
        assert 4 == 3 * 2 - 2

    def test_nat_add(self):
        v = o.small_doubling_verdict(o.nat_add(), [1, 2, 3, 4])
        assert v.square_size == 7 and v.pairwise_commuting and v.bound_satisfied
        assert v.theorem_consistent

    def test_singleton(self, fm):
        v = o.small_doubling_verdict(fm, ["ab"])
        assert v.square_size == 1 and v.pairwise_commuting and v.theorem_consistent

    def test_empty(self, fm):
        with pytest.raises(o.EmptySampleError):
            o.small_doubling_verdict(fm, [])

    def test_left_zero_breaks_theorem(self):
        # S^2 = S in a left-zero semigroup, so the small-doubling bound holds
        lz = o.left_zero(("p", "q", "r"))
        v = o.small_doubling_verdict(lz, ["p", "q", "r"])
        assert v.square_size == 3 and v.bound_satisfied and not v.pairwise_commuting
        assert not v.theorem_consistent

    def test_to_dict(self, fm):
        d = o.small_doubling_verdict(fm, ["a", "b"]).to_dict(fm)
        assert d["noncommuting_witness"] == ["a", "b"]
