"""Ordered-semigroup abstraction and instance-agnostic law checkers.

An instance is an immutable object carrying a binary operation ``op`` and a
total-order comparator ``cmp``.  Elements are plain hashable values in a
canonical form, so equality of elements is structural equality.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Sequence

Element = Hashable

#: Exhaustive enumeration is used for samples up to this many elements.
EXHAUSTIVE_THRESHOLD = 20
#: Number of random triples tested when a sample exceeds the threshold.
RANDOM_TRIALS = 20_000
#: Largest exponent used by the power laws.
MAX_POWER = 8


class DomainError(ValueError):
    """An element does not belong to the instance's carrier."""


class ParseError(DomainError):
    """Text could not be parsed as an element."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class EmptySampleError(ValueError):
    pass


class PreconditionError(ValueError):
    """A hypothesis required by a checked statement does not hold."""


class CapExceededError(RuntimeError):
    """A product or enumeration grew past its configured cap."""


class InvariantViolation(AssertionError):
    """A constructor postcondition failed on recomputation."""


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1

    @classmethod
    def of(cls, x, y) -> "Ordering":
        return cls.LT if x < y else cls.GT if y < x else cls.EQ


class Semigroup:
    """Base class for a semigroup with a total order on its carrier.

    Subclasses implement :meth:`_op`, :meth:`_cmp` and :meth:`validate`.
    ``linearly_ordered`` says whether the order is claimed to be strictly
    compatible with the operation.  Instances with ``is_semiring`` also
    provide :meth:`add` and :attr:`zero`.
    """

    name = "semigroup"
    linearly_ordered = True
    is_semiring = False
    zero: Any = None
    #: Identity element, or None if the carrier has none.
    identity: Any = None

    def params(self) -> dict:
        return {}

    def describe(self) -> dict:
        return {"name": self.name, **self.params()}

    # -- subclass interface -------------------------------------------------
    def validate(self, x) -> Element:
        """Return the canonical form of ``x`` or raise :class:`DomainError`."""
        raise NotImplementedError

    def _op(self, x, y):
        raise NotImplementedError

    def _cmp(self, x, y) -> Ordering:
        raise NotImplementedError

    def _add(self, x, y):
        raise TypeError(f"{self.name} is not a semiring")

    def random_element(self, rng: random.Random) -> Element:
        raise NotImplementedError(f"{self.name} has no random element generator")

    def render(self, x) -> Any:
        """JSON-compatible rendering of an element."""
        return x

    def parse(self, obj) -> Element:
        """Inverse of :meth:`render`."""
        return self.validate(obj)

    def render_text(self, x) -> str:
        import json

        r = self.render(x)
        return r if isinstance(r, str) else json.dumps(r)

    def parse_text(self, text: str) -> Element:
        import json

        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, exc.pos) from None
        return self.parse(obj)

    # -- public operations ---------------------------------------------------
    def op(self, x, y):
        return self._op(x, y)

    def cmp(self, x, y) -> Ordering:
        return self._cmp(x, y)

    def add(self, x, y):
        return self._add(x, y)

    def power(self, x, n: int):
        if n < 1:
            raise ValueError("exponent must be positive")
        result = x
        for _ in range(n - 1):
            result = self._op(result, x)
        return result

    def product(self, xs: Sequence):
        it = iter(xs)
        result = next(it)
        for x in it:
            result = self._op(result, x)
        return result

    def sort_key(self):
        import functools

        return functools.cmp_to_key(self._cmp)

    def sorted(self, xs: Iterable) -> list:
        return sorted(set(xs), key=self.sort_key())

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.params().items())
        return f"{type(self).__name__}({args})"

    def __eq__(self, other):
        return type(self) is type(other) and self.params() == other.params()

    def __hash__(self):
        return hash((type(self).__name__, repr(self.params())))


def render_loose(inst: Semigroup, x) -> Any:
    """Render ``x`` as an element if possible; exponents and labels pass through."""
    try:
        return inst.render(x)
    except (TypeError, AttributeError, ValueError):
        return x


def compare(inst: Semigroup, x, y) -> Ordering:
    """Compare two elements after validating both."""
    return inst.cmp(inst.validate(x), inst.validate(y))


@dataclass
class LawReport:
    law: str
    trials: int = 0
    failures: int = 0
    witness: tuple | None = None
    applicable: bool = True
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def fail(self, witness: tuple):
        self.failures += 1
        if self.witness is None:
            self.witness = witness

    def to_dict(self, inst: Semigroup | None = None) -> dict:
        witness = self.witness
        if witness is not None and inst is not None:
            witness = [render_loose(inst, w) for w in witness]
        return {
            "law": self.law,
            "trials": self.trials,
            "failures": self.failures,
            "witness": witness,
            "applicable": self.applicable,
            **({"notes": self.notes} if self.notes else {}),
        }


def _prepare_sample(inst: Semigroup, sample: Iterable) -> list:
    elems = inst.sorted(inst.validate(x) for x in sample)
    if not elems:
        raise EmptySampleError("sample must be non-empty")
    return elems


def _triples(elems: list, threshold: int, trials: int, seed: int):
    """Yield triples exhaustively for small samples, uniformly at random otherwise."""
    if len(elems) <= threshold:
        yield from itertools.product(elems, repeat=3)
    else:
        rng = random.Random(seed)
        for _ in range(trials):
            yield rng.choice(elems), rng.choice(elems), rng.choice(elems)


def _pairs(elems: list, threshold: int, trials: int, seed: int):
    if len(elems) <= threshold:
        yield from itertools.product(elems, repeat=2)
    else:
        rng = random.Random(seed)
        for _ in range(trials):
            yield rng.choice(elems), rng.choice(elems)


def _positive(inst: Semigroup, c) -> bool:
    # in a semiring only multiplication by elements above zero is order preserving
    return not inst.is_semiring or inst.cmp(inst.zero, c) == Ordering.LT


def check_order_laws(
    inst: Semigroup,
    sample: Iterable,
    mode: str = "translation",
    *,
    threshold: int = EXHAUSTIVE_THRESHOLD,
    trials: int = RANDOM_TRIALS,
    seed: int = 0,
    max_power: int = MAX_POWER,
) -> LawReport:
    """Test strict order compatibility on a finite sample.

    ``translation``: a < b implies ac < bc and ca < cb.
    ``powers``: a < b implies a^n < b^n for 2 <= n <= max_power.
    ``idempotent-power``: a^2 < a implies a^n < a^m for m < n <= max_power.

    ``trials`` counts the strict instances of the hypothesis that were tested.
    """
    elems = _prepare_sample(inst, sample)
    LT = Ordering.LT
    report = LawReport(f"order-{mode}")
    if mode == "translation":
        for a, b, c in _triples(elems, threshold, trials, seed):
            if inst.cmp(a, b) != LT or not _positive(inst, c):
                continue
            report.trials += 1
            if inst.cmp(inst.op(a, c), inst.op(b, c)) != LT:
                report.fail((a, b, c))
            elif inst.cmp(inst.op(c, a), inst.op(c, b)) != LT:
                report.fail((a, b, c))
    elif mode == "powers":
        for a, b in _pairs(elems, threshold, trials, seed):
            if inst.cmp(a, b) != LT:
                continue
            report.trials += 1
            pa, pb = a, b
            for n in range(2, max_power + 1):
                pa, pb = inst.op(pa, a), inst.op(pb, b)
                if inst.cmp(pa, pb) != LT:
                    report.fail((a, b, n))
                    break
    elif mode == "idempotent-power":
        for a in elems:
            if inst.cmp(inst.op(a, a), a) != LT:
                continue
            report.trials += 1
            powers = [a]
            for _ in range(max_power - 1):
                powers.append(inst.op(powers[-1], a))
            for m, n in itertools.combinations(range(1, max_power + 1), 2):
                if inst.cmp(powers[n - 1], powers[m - 1]) != LT:
                    report.fail((a, m, n))
                    break
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


def check_cancellativity(
    inst: Semigroup,
    sample: Iterable,
    *,
    threshold: int = EXHAUSTIVE_THRESHOLD,
    trials: int = RANDOM_TRIALS,
    seed: int = 0,
) -> LawReport:
    """Test ax = ay => x = y and xa = ya => x = y; witness is (a, x, y)."""
    elems = _prepare_sample(inst, sample)
    report = LawReport("cancellativity")
    for a, x, y in _triples(elems, threshold, trials, seed):
        report.trials += 1
        if x == y:
            continue
        if inst.op(a, x) == inst.op(a, y) or inst.op(x, a) == inst.op(y, a):
            report.fail((a, x, y))
    return report


def check_associativity(inst: Semigroup, sample: Iterable, **kw) -> LawReport:
    elems = _prepare_sample(inst, sample)
    report = LawReport("associativity")
    for a, b, c in _triples(elems, kw.get("threshold", EXHAUSTIVE_THRESHOLD),
                            kw.get("trials", RANDOM_TRIALS), kw.get("seed", 0)):
        report.trials += 1
        if inst.op(inst.op(a, b), c) != inst.op(a, inst.op(b, c)):
            report.fail((a, b, c))
    return report


def check_total_order(inst: Semigroup, sample: Iterable, **kw) -> LawReport:
    """Antisymmetry, consistency of EQ with equality, and transitivity."""
    elems = _prepare_sample(inst, sample)
    report = LawReport("total-order")
    for a, b, c in _triples(elems, kw.get("threshold", EXHAUSTIVE_THRESHOLD),
                            kw.get("trials", RANDOM_TRIALS), kw.get("seed", 0)):
        report.trials += 1
        ab, ba = inst.cmp(a, b), inst.cmp(b, a)
        if ab != -ba or (ab == Ordering.EQ) != (a == b):
            report.fail((a, b, c))
        elif ab == Ordering.LT and inst.cmp(b, c) == Ordering.LT and inst.cmp(a, c) != Ordering.LT:
            report.fail((a, b, c))
    return report
