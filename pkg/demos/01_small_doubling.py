"""
Product sets and small doubling in the free monoid
===================================================

Words over {a, b} under concatenation, ordered shortlex.  A set S whose
square S^2 is small must commute; the smallest noncommuting squares have
exactly 3|S| - 2 elements.
"""

import ordsemi as o
from ordsemi.commute import words_universe

fm = o.free_monoid(2)

# %% the square of {a, b} has four words
S = ["a", "b"]
print("S^2 =", o.product_set(fm, [S, S]).render())
print(o.small_doubling_verdict(fm, S).to_dict(fm))

# %% powers of one word reach the lower bound 2|S| - 1
for s in range(1, 6):
    P = o.sharpness_witness(fm, "a", [s])[0]
    print(s, len(o.product_set(fm, [P, P])))

# %% three factors: |S1 S2 S3| >= 1 - 3 + sum |Si|
print(o.superadditivity_check(fm, [["a", "b"], ["", "a"], ["b"]]))

# %% scan every 2..4-subset of the words of length <= 3
report = o.exhaustive_theorem_scan(fm, words_universe(fm, 3), 2, 4)
print(report.examined, "subsets,", report.violations, "violations")
print("first extremal sets:", [h["set"] for h in report.extremal_hits[:5]])
