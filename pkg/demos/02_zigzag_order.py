"""
The zig-zag order on triangular matrices
========================================

Upper triangular matrices with positive rational entries on and above the
diagonal, compared entry by entry along the diagonals: main diagonal first,
then the next one up, and so on.
"""

import random

import ordsemi as o
from ordsemi import Ordering

U2 = o.upper_triangular(2)

# %% the scan order of positions for n = 3
print(o.index_pairs(3))

# %% the first diagonal difference decides
alpha = U2.make([[1, 7], [0, 2]])
beta = U2.make([[1, 3], [0, 5]])
print(U2.cmp(alpha, beta).name)

# %% multiplying both sides keeps the strict order
U3 = o.upper_triangular(3)
rng = random.Random(0)
a, b, c = (U3.random_element(rng) for _ in range(3))
if U3.cmp(a, b) == Ordering.GT:
    a, b = b, a
print(U3.cmp(U3.op(a, c), U3.op(b, c)).name, U3.cmp(U3.op(c, a), U3.op(c, b)).name)

# %% a seeded battery of laws
print(o.randomized_law_suite(U3, 500, seed=42).to_dict()["violations"])

# %% matrices with all entries positive cannot be ordered this way
w = o.pagano_witness(3)
print(w.to_dict())
print(o.check_cancellativity(o.left_zero(("p", "q")), ["p", "q"]).witness)
