"""
Centralizers, normalizers and Neumann chains
============================================

Inside a finite window of words, the normalizer of a set equals its
centralizer.  If ab < ba, the words a^n b, a^(n-1) b a, ..., b a^n increase.
"""

import ordsemi as o
from ordsemi.commute import words_universe

fm = o.free_monoid(2)
U = words_universe(fm, 3)

# %%
for S in (["ab"], ["a", "aa"], ["a", "b"]):
    print(S, o.centralizer(fm, S, U).render(), o.normalizer(fm, S, U).render())

# %% the left-zero semigroup behaves differently
lz = o.left_zero(("p", "q"))
print(o.check_normalizer_equals_centralizer(lz, ["p", "q"], o.commute.explicit_universe(lz, "pq")))

# %% a chain of five words
chain = o.neumann_chain(fm, "a", "b", 4)
print([fm.render(x) for x in chain.chain], chain.strictly_increasing)

# %% powers never repeat in the free monoid; the empty word is idempotent
print(o.periodicity(fm, "ab"), o.periodicity(fm, ""))

# %% bounds for a commuting set and an outsider
S, y = ["a", "aa"], "b"
print(o.ys_sy_bound(fm, S, y), o.disjointness_check(fm, S, y).disjoint,
      o.union_bound_check(fm, S, y))
