"""Concrete ordered semigroups and semirings, plus two non-examples.

Element encodings (all hashable, all canonical):

* free monoid words: tuples of alphabet indices, ``()`` is the empty word;
* rationals: :class:`fractions.Fraction` (always reduced by construction);
* triangular matrices: :class:`TriMatrix`;
* semigroup semiring elements: :class:`FinSuppMap`.
"""

from __future__ import annotations

import itertools
import random
import string
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .core import (
    DomainError,
    InvariantViolation,
    Ordering,
    ParseError,
    Semigroup,
)

Word = tuple

# ---------------------------------------------------------------------------
# rationals


def parse_rational(obj) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a reduced Fraction."""
    if isinstance(obj, bool):
        raise DomainError(f"not a rational: {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, Fraction):
        return obj
    if not isinstance(obj, str):
        raise DomainError(f"rationals are written as 'p/q' strings, got {obj!r}")
    text = obj.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"malformed rational {obj!r}", 0) from None
    if q == 0:
        raise DomainError(f"zero denominator in {obj!r}")
    return Fraction(p, q)


def render_rational(x: Fraction) -> str:
    return str(x)


def random_positive_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


# ---------------------------------------------------------------------------
# free monoid


class FreeMonoid(Semigroup):
    """Words over ``k`` letters under concatenation, ordered shortlex."""

    name = "free_monoid"

    def __init__(self, alphabet_size: int = 2):
        if alphabet_size < 1:
            raise ValueError("alphabet must have at least one letter")
        if alphabet_size > 26:
            raise ValueError("at most 26 letters can be rendered")
        self.k = alphabet_size
        self.letters = string.ascii_lowercase[:alphabet_size]
        self.identity = ()

    def params(self):
        return {"alphabet_size": self.k}

    def validate(self, x) -> Word:
        if isinstance(x, str):
            return self.parse(x)
        if not isinstance(x, tuple) or not all(
            isinstance(i, int) and 0 <= i < self.k for i in x
        ):
            raise DomainError(f"not a word over {self.k} letters: {x!r}")
        return x

    def _op(self, x, y):
        return x + y

    def _cmp(self, x, y):
        if len(x) != len(y):
            return Ordering.LT if len(x) < len(y) else Ordering.GT
        return Ordering.of(x, y)

    def render(self, x):
        return "".join(self.letters[i] for i in x)

    def parse(self, obj):
        if not isinstance(obj, str):
            raise DomainError(f"words are written as strings, got {obj!r}")
        out = []
        for pos, ch in enumerate(obj):
            i = self.letters.find(ch)
            if i < 0:
                raise ParseError(f"symbol {ch!r} outside alphabet {self.letters!r}", pos)
            out.append(i)
        return tuple(out)

    def parse_text(self, text):
        return self.parse(text)

    def render_text(self, x):
        return self.render(x)

    def words(self, max_len: int, min_len: int = 0) -> list[Word]:
        """All words with ``min_len <= length <= max_len`` in shortlex order."""
        out = []
        for n in range(min_len, max_len + 1):
            out.extend(itertools.product(range(self.k), repeat=n))
        return out

    def random_element(self, rng, max_len: int = 6):
        # geometric-tapered length in 1..max_len
        n = 1
        while n < max_len and rng.random() < 0.5:
            n += 1
        return tuple(rng.randrange(self.k) for _ in range(n))


def free_monoid(alphabet_size: int = 2) -> FreeMonoid:
    return FreeMonoid(alphabet_size)


# ---------------------------------------------------------------------------
# positive integers under addition


class NatAdd(Semigroup):
    """Positive integers under addition with the usual order."""

    name = "nat_add"

    def validate(self, x):
        if isinstance(x, str):
            return self.parse_text(x)
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise DomainError(f"not a positive integer: {x!r}")
        return x

    def _op(self, x, y):
        return x + y

    def _cmp(self, x, y):
        return Ordering.of(x, y)

    def parse_text(self, text):
        try:
            return self.validate(int(text))
        except ValueError:
            raise ParseError(f"not an integer: {text!r}", 0) from None

    def render_text(self, x):
        return str(x)

    def random_element(self, rng):
        return rng.randint(1, 20)


def nat_add() -> NatAdd:
    return NatAdd()


# ---------------------------------------------------------------------------
# nonnegative rationals as a semiring


class NonnegRationals(Semigroup):
    """The semiring of nonnegative rationals; ``op`` is multiplication."""

    name = "nonneg_rationals"
    is_semiring = True

    def __init__(self):
        self.zero = Fraction(0)
        self.identity = Fraction(1)

    def validate(self, x):
        q = parse_rational(x)
        if q < 0:
            raise DomainError(f"negative coefficient {x!r}")
        return q

    def _op(self, x, y):
        return x * y

    def _add(self, x, y):
        return x + y

    def _cmp(self, x, y):
        return Ordering.of(x, y)

    def render(self, x):
        return render_rational(x)

    def parse(self, obj):
        return self.validate(obj)

    def parse_text(self, text):
        return self.validate(text)

    def render_text(self, x):
        return render_rational(x)

    def random_element(self, rng):
        return random_positive_rational(rng)


def nonneg_rationals() -> NonnegRationals:
    return NonnegRationals()


# ---------------------------------------------------------------------------
# triangular matrices


def matmul(x: Sequence[Sequence], y: Sequence[Sequence]) -> tuple:
    """Exact square matrix product as nested tuples."""
    n = len(x)
    if len(y) != n:
        raise DomainError(f"dimension mismatch: {n} vs {len(y)}")
    cols = list(zip(*y))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols)
                 for row in x)


def transpose(x: Sequence[Sequence]) -> tuple:
    return tuple(zip(*x))


@dataclass(frozen=True)
class TriMatrix:
    """Square matrix of rationals, tagged upper or lower triangular."""

    shape: str
    rows: tuple

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def T(self) -> "TriMatrix":
        other = "lower" if self.shape == "upper" else "upper"
        return TriMatrix(other, transpose(self.rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def check(self) -> "TriMatrix":
        """Raise DomainError unless the triangle is positive and the rest zero."""
        n = self.n
        if self.shape not in ("upper", "lower"):
            raise DomainError(f"unknown shape {self.shape!r}")
        for i, row in enumerate(self.rows):
            if len(row) != n:
                raise DomainError("matrix is not square")
            for j, v in enumerate(row):
                on = i <= j if self.shape == "upper" else j <= i
                if on and not v > 0:
                    raise DomainError(f"entry ({i + 1},{j + 1}) = {v} is not positive")
                if not on and v != 0:
                    raise DomainError(f"entry ({i + 1},{j + 1}) = {v} is off the triangle")
        return self


def index_pairs(n: int) -> list[tuple[int, int]]:
    """Positions (i, j), 1 <= i <= j <= n, in well-order: by j - i, then j."""
    return [(j - d, j) for d in range(n) for j in range(d + 1, n + 1)]


def index_pair_compare(n: int, p: tuple[int, int], q: tuple[int, int]) -> Ordering:
    for i, j in (p, q):
        if not 1 <= i <= j <= n:
            raise DomainError(f"({i},{j}) is not an index pair for n={n}")
    return Ordering.of((p[1] - p[0], p[1]), (q[1] - q[0], q[1]))


class Triangular(Semigroup):
    """Triangular n x n matrices with positive rational entries on the triangle.

    Upper matrices are compared by the zig-zag order: entries are scanned in
    :func:`index_pairs` order and the first difference decides.  Lower
    matrices are compared through their transposes.
    """

    name = "triangular"

    def __init__(self, n: int, shape: str = "upper"):
        if n < 1:
            raise ValueError("dimension must be at least 1")
        if shape not in ("upper", "lower"):
            raise ValueError(f"unknown shape {shape!r}")
        self.n = n
        self.shape = shape
        self.name = f"{shape}_triangular"
        # zero-based positions in the upper triangle, in scan order
        self._scan = [(i - 1, j - 1) for i, j in index_pairs(n)]

    def params(self):
        return {"dim": self.n, "shape": self.shape}

    def validate(self, x):
        if isinstance(x, TriMatrix):
            if x.shape != self.shape or x.n != self.n:
                raise DomainError(f"expected {self.shape} {self.n}x{self.n}, got {x.shape} {x.n}x{x.n}")
            return x.check()
        return self.parse(x)

    def make(self, rows) -> TriMatrix:
        return self.validate(TriMatrix(self.shape, tuple(tuple(parse_rational(v) for v in r)
                                                         for r in rows)))

    def _op(self, x, y):
        if x.n != y.n:
            raise DomainError(f"dimension mismatch: {x.n} vs {y.n}")
        n = x.n
        if self.shape == "upper":
            a, b = x.rows, y.rows
        else:
            # (xy)^T = y^T x^T
            a, b = transpose(y.rows), transpose(x.rows)
        zero = Fraction(0)
        rows = [[zero] * n for _ in range(n)]
        for i in range(n):
            ai = a[i]
            for j in range(i, n):
                rows[i][j] = sum(ai[k] * b[k][j] for k in range(i + 1, j + 1)) + ai[i] * b[i][j]
        out = tuple(map(tuple, rows))
        if self.shape == "lower":
            out = transpose(out)
        # closure guard: positivity is re-checked on every product
        return TriMatrix(self.shape, out).check()

    def _cmp(self, x, y):
        if self.shape == "lower":
            x, y = x.T, y.T
        for i, j in self._scan:
            a, b = x.rows[i][j], y.rows[i][j]
            if a != b:
                return Ordering.LT if a < b else Ordering.GT
        return Ordering.EQ

    def render(self, x):
        return [[render_rational(v) for v in row] for row in x.rows]

    def parse(self, obj):
        if (not isinstance(obj, list) or len(obj) != self.n
                or not all(isinstance(r, list) and len(r) == self.n for r in obj)):
            raise DomainError(f"expected a {self.n}x{self.n} nested array")
        rows = tuple(tuple(parse_rational(v) for v in r) for r in obj)
        return TriMatrix(self.shape, rows).check()

    def random_element(self, rng):
        rows = [[Fraction(0)] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(i, self.n):
                if self.shape == "upper":
                    rows[i][j] = random_positive_rational(rng)
                else:
                    rows[j][i] = random_positive_rational(rng)
        return TriMatrix(self.shape, tuple(map(tuple, rows)))


def upper_triangular(n: int) -> Triangular:
    return Triangular(n, "upper")


def lower_triangular(n: int) -> Triangular:
    return Triangular(n, "lower")


# ---------------------------------------------------------------------------
# semigroup semiring


@dataclass(frozen=True)
class FinSuppMap:
    """Finitely supported map A -> K, stored as (key, coeff) pairs sorted by A."""

    terms: tuple = ()

    def __len__(self):
        return len(self.terms)

    def get(self, key, default=None):
        for k, v in self.terms:
            if k == key:
                return v
        return default


class SemigroupSemiring(Semigroup):
    """K[A]: finitely supported maps with pointwise sum and Cauchy product.

    ``f < g`` iff at the A-least point where f and g disagree, the
    coefficient of f is K-smaller.
    """

    is_semiring = True

    def __init__(self, coeffs: Semigroup, base: Semigroup):
        if not coeffs.is_semiring:
            raise ValueError("coefficients must form a semiring")
        self.K = coeffs
        self.A = base
        self.name = f"{coeffs.name}[{base.name}]"
        self.zero = FinSuppMap()
        self.linearly_ordered = coeffs.linearly_ordered and base.linearly_ordered
        if coeffs.identity is not None and base.identity is not None:
            self.identity = FinSuppMap(((base.identity, coeffs.identity),))
        self._key = base.sort_key()

    def params(self):
        return {"coefficients": self.K.describe(), "base": self.A.describe()}

    def from_pairs(self, pairs) -> FinSuppMap:
        """Build a map summing coefficients of repeated keys and dropping zeros."""
        acc: dict = {}
        for key, c in pairs:
            key = self.A.validate(key)
            c = self.K.validate(c)
            acc[key] = self.K.add(acc[key], c) if key in acc else c
        terms = [(k, v) for k, v in acc.items() if v != self.K.zero]
        terms.sort(key=lambda t: self._key(t[0]))
        return FinSuppMap(tuple(terms))

    def validate(self, x):
        if isinstance(x, FinSuppMap):
            keys = [k for k, _ in x.terms]
            for k, v in x.terms:
                self.A.validate(k)
                self.K.validate(v)
                if v == self.K.zero:
                    raise DomainError("zero coefficient stored in a finitely supported map")
            for k1, k2 in zip(keys, keys[1:]):
                if self.A.cmp(k1, k2) != Ordering.LT:
                    raise DomainError("keys are not strictly increasing")
            return x
        return self.parse(x)

    def _add(self, f, g):
        return self.from_pairs(f.terms + g.terms)

    def _op(self, f, g):
        return self.from_pairs(
            (self.A.op(a, b), self.K.op(x, y)) for a, x in f.terms for b, y in g.terms
        )

    def _cmp(self, f, g):
        # single merge over the two sorted supports
        i = j = 0
        zero = self.K.zero
        ft, gt = f.terms, g.terms
        while i < len(ft) or j < len(gt):
            if j == len(gt):
                c = Ordering.LT
            elif i == len(ft):
                c = Ordering.GT
            else:
                c = self.A.cmp(ft[i][0], gt[j][0])
            if c == Ordering.LT:
                fv, gv = ft[i][1], zero
                i += 1
            elif c == Ordering.GT:
                fv, gv = zero, gt[j][1]
                j += 1
            else:
                fv, gv = ft[i][1], gt[j][1]
                i += 1
                j += 1
            if fv != gv:
                return self.K.cmp(fv, gv)
        return Ordering.EQ

    def render(self, f):
        return [[self.A.render(k), self.K.render(v)] for k, v in f.terms]

    def parse(self, obj):
        if not isinstance(obj, list) or not all(
            isinstance(t, list) and len(t) == 2 for t in obj
        ):
            raise DomainError("expected an array of [key, coefficient] pairs")
        pairs = [(self.A.parse(k), self.K.parse(v)) for k, v in obj]
        if len({k for k, _ in pairs}) != len(pairs):
            raise DomainError("repeated key in finitely supported map")
        return self.from_pairs(pairs)

    def random_element(self, rng, max_support: int = 4):
        size = rng.randint(1, max_support)
        pairs = [(self.A.random_element(rng), self.K.random_element(rng)) for _ in range(size)]
        return self.from_pairs(pairs)


def semigroup_semiring(coeffs: Semigroup, base: Semigroup) -> SemigroupSemiring:
    return SemigroupSemiring(coeffs, base)


# ---------------------------------------------------------------------------
# non-examples


class LeftZero(Semigroup):
    """The left-zero semigroup ``(a, b) -> a``; not linearly orderable for 2+ elements."""

    name = "left_zero"
    linearly_ordered = False

    def __init__(self, carrier: Sequence[str] = ("p", "q")):
        carrier = list(dict.fromkeys(carrier))
        if not carrier:
            raise ValueError("carrier must be non-empty")
        self.carrier = tuple(carrier)
        self._rank = {c: i for i, c in enumerate(self.carrier)}
        self.linearly_ordered = len(self.carrier) < 2

    def params(self):
        return {"carrier": list(self.carrier)}

    def validate(self, x):
        if x not in self._rank:
            raise DomainError(f"{x!r} is not in the carrier {self.carrier}")
        return x

    def _op(self, x, y):
        return x

    def _cmp(self, x, y):
        return Ordering.of(self._rank[x], self._rank[y])

    def parse_text(self, text):
        return self.validate(text)

    def render_text(self, x):
        return x

    def random_element(self, rng):
        return rng.choice(self.carrier)


def left_zero(carrier: Sequence[str] = ("p", "q")) -> LeftZero:
    return LeftZero(carrier)


@dataclass(frozen=True)
class PaganoWitness:
    """All-positive matrices alpha != beta with alpha^2 = alpha beta."""

    n: int
    alpha: tuple
    beta: tuple

    @property
    def alpha_squared(self) -> tuple:
        return matmul(self.alpha, self.alpha)

    @property
    def alpha_beta(self) -> tuple:
        return matmul(self.alpha, self.beta)

    def to_dict(self) -> dict:
        def r(m):
            return [[render_rational(v) for v in row] for row in m]

        return {"n": self.n, "alpha": r(self.alpha), "beta": r(self.beta),
                "alpha_squared": r(self.alpha_squared), "alpha_beta": r(self.alpha_beta)}


def pagano_witness(n: int) -> PaganoWitness:
    """Cancellativity failure among matrices with all entries positive.

    alpha is the all-ones matrix; beta has (n+1)/2 on the diagonal and 1/2
    elsewhere, so each column of beta sums to n.
    """
    if n < 2:
        raise ValueError("the witness needs n >= 2")
    one, half = Fraction(1), Fraction(1, 2)
    alpha = tuple(tuple(one for _ in range(n)) for _ in range(n))
    beta = tuple(tuple(Fraction(n + 1, 2) if i == j else half for j in range(n))
                 for i in range(n))
    w = PaganoWitness(n, alpha, beta)
    if any(sum(col) != n for col in zip(*beta)):
        raise InvariantViolation("column sums of beta differ from n")
    if alpha == beta or w.alpha_squared != w.alpha_beta:
        raise InvariantViolation("alpha^2 != alpha beta")
    return w


# ---------------------------------------------------------------------------
# lookup used by the command line


def make_instance(name: str, **params: Any) -> Semigroup:
    if name == "free_monoid":
        return FreeMonoid(params.get("alphabet_size", 2))
    if name == "nat_add":
        return NatAdd()
    if name in ("upper_triangular", "lower_triangular"):
        return Triangular(params.get("dim", 2), name.split("_")[0])
    if name == "left_zero":
        return LeftZero(params.get("carrier", ("p", "q")))
    if name == "nonneg_rationals":
        return NonnegRationals()
    if name == "semiring":
        return SemigroupSemiring(NonnegRationals(), FreeMonoid(params.get("alphabet_size", 2)))
    raise ValueError(f"unknown instance {name!r}")


INSTANCE_NAMES = ("free_monoid", "nat_add", "upper_triangular", "lower_triangular",
                  "left_zero", "nonneg_rationals", "semiring")

__all__ = [
    "FinSuppMap", "FreeMonoid", "LeftZero", "NatAdd", "NonnegRationals", "PaganoWitness",
    "SemigroupSemiring", "TriMatrix", "Triangular", "free_monoid", "index_pair_compare",
    "index_pairs", "left_zero", "lower_triangular", "make_instance", "matmul", "nat_add",
    "nonneg_rationals", "pagano_witness", "parse_rational", "semigroup_semiring",
    "upper_triangular",
]
