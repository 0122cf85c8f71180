"""Exhaustive and seeded-random verification harnesses.

Every scan returns a :class:`ScanReport`.  Reports are deterministic: the same
instance, universe, size range, seed and caps give the same document, no
matter how many worker processes were used.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .commute import Universe, neumann_chain
from .core import CapExceededError, Ordering, Semigroup, render_loose

#: Default cap on the number of subsets a scan may enumerate.
ENUM_CAP = 10**6

PROGRESSION_READING = (
    "S must lie inside {a*b^i : 0 <= i <= t - s} for some commuting a, b in U, "
    "where s = |S| and t = |S^2|"
)


@dataclass
class ScanReport:
    scan_name: str
    instance: dict
    universe: dict
    size_range: tuple | None = None
    examined: int = 0
    violations: int = 0
    violation_list: list = field(default_factory=list)
    extremal_hits: list = field(default_factory=list)
    parameters: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        return {
            "scan": self.scan_name,
            "instance": self.instance,
            "universe": self.universe,
            "size_range": list(self.size_range) if self.size_range else None,
            "examined": self.examined,
            "violations": self.violations,
            "violation_list": self.violation_list,
            "extremal_hits": self.extremal_hits,
            "parameters": self.parameters,
            "details": self.details,
        }


class _Tables:
    """Product and commutation tables over the universe's element indices."""

    def __init__(self, inst: Semigroup, elems: tuple):
        self.elems = elems
        n = len(elems)
        self.prod = [[inst.op(elems[i], elems[j]) for j in range(n)] for i in range(n)]
        self.comm = [[self.prod[i][j] == self.prod[j][i] for j in range(n)] for i in range(n)]

    def square(self, idx: tuple) -> set:
        p = self.prod
        return {p[i][j] for i in idx for j in idx}

    def noncommuting_pair(self, idx: tuple):
        c = self.comm
        for x, i in enumerate(idx):
            for j in idx[x + 1:]:
                if not c[i][j]:
                    return i, j
        return None


def _check_enum_cap(n: int, kmin: int, kmax: int, cap: int):
    total = sum(math.comb(n, k) for k in range(kmin, kmax + 1))
    if total > cap:
        raise CapExceededError(
            f"{total} subsets of a {n}-element universe exceed the enumeration cap {cap}; "
            "shrink the universe or the size range"
        )
    return total


def _theorem_chunk(args):
    inst, elems, k, first = args
    tables = _Tables(inst, elems)
    return _theorem_scan_part(tables, k, first)


def _theorem_scan_part(tables: _Tables, k: int, first: int | None):
    """Scan k-subsets (optionally only those whose least index is ``first``)."""
    n = len(tables.elems)
    if first is None:
        combos = itertools.combinations(range(n), k)
    else:
        combos = ((first, *rest) for rest in itertools.combinations(range(first + 1, n), k - 1))
    examined = 0
    bad, hits = [], []
    for idx in combos:
        examined += 1
        pair = tables.noncommuting_pair(idx)
        if pair is None:
            continue
        sq = len(tables.square(idx))
        if sq < 3 * k - 2:
            bad.append((idx, sq, pair))
        elif sq == 3 * k - 2:
            hits.append((idx, sq, pair))
    return examined, bad, hits


def exhaustive_theorem_scan(
    inst: Semigroup,
    U: Universe,
    kmin: int = 2,
    kmax: int = 4,
    *,
    cap_enum: int = ENUM_CAP,
    jobs: int = 1,
) -> ScanReport:
    """Every S in U with kmin <= |S| <= kmax: a noncommuting S needs |S^2| >= 3|S| - 2.

    Subsets are enumerated lexicographically over U's sorted indices.  Sets
    reaching the bound exactly are reported as extremal hits.
    """
    if not 2 <= kmin <= kmax:
        raise ValueError("need 2 <= kmin <= kmax")
    elems = tuple(U.elements)
    n = len(elems)
    _check_enum_cap(n, kmin, kmax, cap_enum)
    parts = []
    if jobs > 1 and n:
        tasks = [(inst, elems, k, f) for k in range(kmin, kmax + 1) for f in range(n)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_theorem_chunk, tasks))
    else:
        tables = _Tables(inst, elems)
        parts = [_theorem_scan_part(tables, k, None) for k in range(kmin, kmax + 1)]

    report = ScanReport(
        "theorem",
        inst.describe(),
        U.recipe,
        (kmin, kmax),
        parameters={"cap_enum": cap_enum},
        details={"statement": "noncommuting S => |S^2| >= 3|S| - 2"},
    )
    render = inst.render
    # chunks come back in (k, first index) order, which is enumeration order
    for examined, bad, hits in parts:
        report.examined += examined
        for idx, sq, (i, j) in bad:
            report.violations += 1
            report.violation_list.append({
                "set": [render(elems[t]) for t in idx],
                "square_size": sq,
                "noncommuting": [render(elems[i]), render(elems[j])],
            })
        for idx, sq, (i, j) in hits:
            report.extremal_hits.append({
                "set": [render(elems[t]) for t in idx],
                "square_size": sq,
                "noncommuting": [render(elems[i]), render(elems[j])],
                "annotation": f"|S^2| = {sq} = 3*{len(idx)} - 2",
            })
    return report


def freiman_progression_explorer(
    inst: Semigroup,
    U: Universe,
    kmax: int = 4,
    *,
    kmin: int = 2,
    cap_enum: int = ENUM_CAP,
) -> ScanReport:
    """Look for a covering progression a, ab, ..., ab^(t-s) for small-doubling commuting S.

    Only pairwise-commuting S with t = |S^2| <= 3|S| - 4 are in scope.
    Nothing is asserted: ``violations`` stays 0 and the per-set outcome is
    listed under ``extremal_hits`` (covered) and ``details['uncovered']``.
    """
    if kmax < 2 or kmin < 2:
        raise ValueError("subset sizes start at 2")
    elems = tuple(U.elements)
    n = len(elems)
    _check_enum_cap(n, kmin, kmax, cap_enum)
    tables = _Tables(inst, elems)
    report = ScanReport(
        "freiman",
        inst.describe(),
        U.recipe,
        (kmin, kmax),
        parameters={"cap_enum": cap_enum},
        details={"reading": PROGRESSION_READING},
    )
    out_of_hyp = noncomm = 0
    uncovered = []
    commuting_pairs = [(i, j) for i in range(n) for j in range(n) if tables.comm[i][j]]
    render = inst.render
    for k in range(kmin, kmax + 1):
        for idx in itertools.combinations(range(n), k):
            report.examined += 1
            if tables.noncommuting_pair(idx) is not None:
                noncomm += 1
                continue
            t = len(tables.square(idx))
            if t > 3 * k - 4:
                out_of_hyp += 1
                continue
            target = {elems[i] for i in idx}
            found = None
            for i, j in commuting_pairs:
                a, b = elems[i], elems[j]
                prog = {a}
                x = a
                for _ in range(t - k):
                    x = inst.op(x, b)
                    prog.add(x)
                if target <= prog:
                    found = (a, b)
                    break
            entry = {"set": [render(elems[i]) for i in idx], "square_size": t}
            if found:
                entry["a"], entry["b"] = render(found[0]), render(found[1])
                entry["annotation"] = f"covered by a progression of length {t - k + 1}"
                report.extremal_hits.append(entry)
            else:
                uncovered.append(entry)
    report.details.update(
        noncommuting_skipped=noncomm,
        out_of_hypothesis=out_of_hyp,
        covered=len(report.extremal_hits),
        uncovered=uncovered,
    )
    return report


def commuting_factorization_search(inst: Semigroup, U: Universe) -> ScanReport:
    """Search U for a, b, x, y, z with x, y, z commuting with b, xy = az or xy = za, ab != ba.

    In a cancellative semigroup no such tuple exists.
    """
    elems = tuple(U.elements)
    tables = _Tables(inst, elems)
    n = len(elems)
    report = ScanReport("commuting-factorization", inst.describe(), U.recipe)
    p = tables.prod
    for bi in range(n):
        cb = [i for i in range(n) if tables.comm[i][bi]]
        nc = [i for i in range(n) if not tables.comm[i][bi]]
        if not nc or not cb:
            continue
        # xy for x, y in C(b) against az and za for z in C(b)
        xy = {p[x][y]: (x, y) for x in cb for y in cb}
        for ai in nc:
            for z in cb:
                for hit in (p[ai][z], p[z][ai]):
                    report.examined += 1
                    if hit in xy:
                        x, y = xy[hit]
                        report.violations += 1
                        report.violation_list.append(
                            [inst.render(elems[t]) for t in (ai, bi, x, y, z)])
    return report


# ---------------------------------------------------------------------------
# randomized battery


def _lt(inst, x, y) -> bool:
    return inst.cmp(x, y) == Ordering.LT


def _battery(inst: Semigroup, a, b, c, depth: int) -> list[str]:
    """Return the names of the laws that fail on one random triple."""
    failed = []
    op = inst.op
    if op(op(a, b), c) != op(a, op(b, c)):
        failed.append("associativity")
    ab, ba = inst.cmp(a, b), inst.cmp(b, a)
    if ab != -ba or (ab == Ordering.EQ) != (a == b):
        failed.append("antisymmetry")
    if ab == Ordering.GT:
        a, b = b, a
    if a == b:
        return failed
    # now a < b
    positive = not inst.is_semiring or _lt(inst, inst.zero, c)
    if positive:
        if not _lt(inst, op(a, c), op(b, c)):
            failed.append("right-translation")
        if not _lt(inst, op(c, a), op(c, b)):
            failed.append("left-translation")
        if op(c, a) == op(c, b) or op(a, c) == op(b, c):
            failed.append("cancellativity")
    if inst.is_semiring:
        add = inst.add
        if not _lt(inst, add(a, c), add(b, c)):
            failed.append("additive-translation")
        if add(a, b) != add(b, a):
            failed.append("additive-commutativity")
        if op(c, add(a, b)) != add(op(c, a), op(c, b)) or op(add(a, b), c) != add(op(a, c), op(b, c)):
            failed.append("distributivity")
        if op(inst.zero, c) != inst.zero or op(c, inst.zero) != inst.zero:
            failed.append("zero-annihilates")
        if add(inst.zero, c) != c:
            failed.append("additive-identity")
    # multiplicative laws need factors above zero in a semiring
    if inst.is_semiring and not (_lt(inst, inst.zero, a) and _lt(inst, inst.zero, b)):
        return failed
    pa, pb = a, b
    for _ in range(depth - 1):
        pa, pb = op(pa, a), op(pb, b)
        if not _lt(inst, pa, pb):
            failed.append("powers")
            break
    # a != b here, so exactly one of ab < ba, ab = ba, ab > ba
    x, y = (a, b) if _lt(inst, op(a, b), op(b, a)) else (b, a)
    commuting = op(a, b) == op(b, a)
    p = x
    for n in range(1, depth + 1):
        if n > 1:
            p = op(p, x)
        if (op(p, y) == op(y, p)) != commuting:
            failed.append("power-commutation")
            break
    if not commuting and not neumann_chain(inst, x, y, depth).strictly_increasing:
        failed.append("neumann-chain")
    return failed


def randomized_law_suite(
    inst: Semigroup,
    trials: int = 1000,
    seed: int = 0,
    *,
    depth: int = 3,
) -> ScanReport:
    """Run the law battery on ``trials`` seeded random triples.

    The battery covers associativity, antisymmetry, strict left and right
    translation, cancellativity, powers, power commutation and Neumann
    chains up to ``depth``; semirings add the additive and distributive laws
    (multiplicative laws only for factors above zero).
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = random.Random(seed)
    report = ScanReport(
        "laws",
        inst.describe(),
        {"kind": "random", "seed": seed},
        parameters={"trials": trials, "seed": seed, "depth": depth},
    )
    counts: dict[str, int] = {}
    for _ in range(trials):
        a, b, c = (inst.random_element(rng) for _ in range(3))
        report.examined += 1
        failed = _battery(inst, a, b, c, depth)
        for law in failed:
            counts[law] = counts.get(law, 0) + 1
        if failed:
            report.violations += 1
            if len(report.violation_list) < 20:
                report.violation_list.append({
                    "laws": failed,
                    "triple": [render_loose(inst, x) for x in (a, b, c)],
                })
    report.details["failures_by_law"] = counts
    return report
