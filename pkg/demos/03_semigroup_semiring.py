"""
Noncommutative polynomials as a semigroup semiring
==================================================

Finitely supported maps from words to nonnegative rationals, with pointwise
sum and convolution product.  Two maps compare at the shortlex-least word
where their coefficients differ.
"""

import ordsemi as o

K = o.semigroup_semiring(o.nonneg_rationals(), o.free_monoid(2))

f = K.parse([["a", "1"], ["b", "1"]])
g = K.parse([["a", "1"]])

# %% (a + b) a = aa + ba
print(K.render(K.op(f, g)))
print(K.render(K.op(g, f)))

# %% comparison
print(K.cmp(K.parse([["a", "2"]]), K.parse([["a", "1"], ["b", "1"]])).name)

# %% the law battery with supports up to 4
print(o.randomized_law_suite(K, 300, seed=1).to_dict()["details"])
