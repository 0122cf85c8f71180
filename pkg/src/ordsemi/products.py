"""Product sets and the cardinality bounds they satisfy in ordered semigroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .core import (
    CapExceededError,
    EmptySampleError,
    InvariantViolation,
    PreconditionError,
    Semigroup,
)

#: Default hard cap on the size of a materialized product set.
PRODUCT_CAP = 10**6


class FiniteSubset:
    """Finite set of canonical elements of one instance, kept sorted by its order."""

    __slots__ = ("instance", "elements", "_set")

    def __init__(self, inst: Semigroup, elements: Iterable = (), *, validate: bool = True):
        if validate:
            elements = (inst.validate(x) for x in elements)
        self.instance = inst
        self.elements = tuple(inst.sorted(elements))
        self._set = frozenset(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self._set

    def __eq__(self, other):
        if isinstance(other, FiniteSubset):
            return self.instance == other.instance and self._set == other._set
        return NotImplemented

    def __hash__(self):
        return hash(self._set)

    def __repr__(self):
        return f"FiniteSubset({self.render()!r})"

    @property
    def set(self) -> frozenset:
        return self._set

    def render(self) -> list:
        return [self.instance.render(x) for x in self.elements]


def as_subset(inst: Semigroup, s) -> FiniteSubset:
    if isinstance(s, FiniteSubset):
        if s.instance != inst:
            raise ValueError(f"subset belongs to {s.instance!r}, not {inst!r}")
        return s
    return FiniteSubset(inst, s)


def _nonempty(inst: Semigroup, s) -> FiniteSubset:
    s = as_subset(inst, s)
    if not len(s):
        raise EmptySampleError("set must be non-empty")
    return s


def _raw_product(inst: Semigroup, left: Iterable, right: Iterable, cap: int) -> set:
    out = set()
    right = list(right)
    for a in left:
        for b in right:
            out.add(inst.op(a, b))
        if len(out) > cap:
            raise CapExceededError(f"product set exceeds cap of {cap} elements")
    return out


def product_set(inst: Semigroup, sets: Sequence, *, cap: int = PRODUCT_CAP) -> FiniteSubset:
    """All ordered products a1...an with ai in sets[i], deduplicated and sorted."""
    if not sets:
        raise EmptySampleError("need at least one factor")
    factors = [_nonempty(inst, s) for s in sets]
    acc = set(factors[0])
    for s in factors[1:]:
        acc = _raw_product(inst, acc, s, cap)
    return FiniteSubset(inst, acc, validate=False)


def square(inst: Semigroup, s, *, cap: int = PRODUCT_CAP) -> FiniteSubset:
    return product_set(inst, [s, s], cap=cap)


class BoundCheck(NamedTuple):
    lower: int
    actual: int
    holds: bool


def superadditivity_check(inst: Semigroup, sets: Sequence, *, cap: int = PRODUCT_CAP) -> BoundCheck:
    """|S1...Sn| against 1 - n + sum |Si|."""
    factors = [_nonempty(inst, s) for s in sets]
    bound = 1 - len(factors) + sum(len(s) for s in factors)
    actual = len(product_set(inst, factors, cap=cap))
    return BoundCheck(bound, actual, actual >= bound)


def power_set(inst: Semigroup, a, s: int) -> FiniteSubset:
    """The set {a, a^2, ..., a^s}."""
    if s < 1:
        raise ValueError("sizes must be positive")
    a = inst.validate(a)
    powers = [a]
    for _ in range(s - 1):
        powers.append(inst.op(powers[-1], a))
    return FiniteSubset(inst, powers, validate=False)


def sharpness_witness(inst: Semigroup, a, sizes: Sequence[int]) -> list[FiniteSubset]:
    """Sets Si = {a, ..., a^si} whose product has exactly 1 - n + sum si elements."""
    if not sizes:
        raise ValueError("need at least one size")
    sets = [power_set(inst, a, s) for s in sizes]
    want = 1 - len(sizes) + sum(sizes)
    if any(len(S) != s for S, s in zip(sets, sizes)):
        raise InvariantViolation(f"powers of {inst.render(a)!r} repeat")
    got = len(product_set(inst, sets))
    if got != want:
        raise InvariantViolation(f"product has {got} elements, expected {want}")
    return sets


def pairwise_commuting(inst: Semigroup, s) -> tuple | None:
    """Return the first noncommuting pair of ``s`` or None if all pairs commute."""
    elems = list(s)
    for i, a in enumerate(elems):
        for b in elems[i + 1:]:
            if inst.op(a, b) != inst.op(b, a):
                return (a, b)
    return None


def _check_translate_hypotheses(inst: Semigroup, S, y):
    S = _nonempty(inst, S)
    y = inst.validate(y)
    pair = pairwise_commuting(inst, S)
    if pair is not None:
        raise PreconditionError(f"S is not pairwise commuting: {[inst.render(p) for p in pair]}")
    if all(inst.op(y, s) == inst.op(s, y) for s in S):
        raise PreconditionError(f"{inst.render(y)!r} centralizes S")
    return S, y


def translates(inst: Semigroup, S, y) -> set:
    """The set yS union Sy."""
    return {inst.op(y, s) for s in S} | {inst.op(s, y) for s in S}


class Disjointness(NamedTuple):
    disjoint: bool
    intersection: FiniteSubset


def disjointness_check(inst: Semigroup, S, y) -> Disjointness:
    """S^2 against yS union Sy, for pairwise-commuting S and y outside its centralizer."""
    S, y = _check_translate_hypotheses(inst, S, y)
    inter = square(inst, S).set & translates(inst, S, y)
    return Disjointness(not inter, FiniteSubset(inst, inter, validate=False))


def union_bound_check(inst: Semigroup, S, y) -> BoundCheck:
    """|S^2 union yS union Sy| against 3|S|, under the same hypotheses."""
    S, y = _check_translate_hypotheses(inst, S, y)
    actual = len(square(inst, S).set | translates(inst, S, y))
    return BoundCheck(3 * len(S), actual, actual >= 3 * len(S))


@dataclass
class DoublingVerdict:
    size: int
    square_size: int
    pairwise_commuting: bool
    bound_satisfied: bool
    theorem_consistent: bool
    noncommuting_witness: tuple | None = None

    def to_dict(self, inst: Semigroup | None = None) -> dict:
        w = self.noncommuting_witness
        if w is not None and inst is not None:
            w = [inst.render(x) for x in w]
        return {
            "size": self.size,
            "square_size": self.square_size,
            "pairwise_commuting": self.pairwise_commuting,
            "bound_3s_minus_3_satisfied": self.bound_satisfied,
            "theorem_consistent": self.theorem_consistent,
            "noncommuting_witness": w,
        }


def small_doubling_verdict(inst: Semigroup, S, *, cap: int = PRODUCT_CAP) -> DoublingVerdict:
    """Check that |S^2| <= 3|S| - 3 forces S to commute pairwise.

    Pairwise commutation of S is equivalent to the subsemigroup generated by
    S being abelian, so no infinite object is built.
    """
    S = _nonempty(inst, S)
    k = len(S)
    sq = len(square(inst, S, cap=cap))
    pair = pairwise_commuting(inst, S)
    small = sq <= 3 * k - 3
    return DoublingVerdict(
        size=k,
        square_size=sq,
        pairwise_commuting=pair is None,
        bound_satisfied=small,
        theorem_consistent=not (small and pair is not None),
        noncommuting_witness=pair,
    )
