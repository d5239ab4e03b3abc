# coding: utf-8

# # Valuations and the product formula
#
# Every nonzero rational has an absolute value at each prime and at infinity.
# Only finitely many of them differ from 1, and their product is exactly 1.

# In[1]:

from fractions import Fraction

from primeplaces import Place, absolute_value, euclid_witness, places_of, valuation
from primeplaces import product_formula_check


# In[2]:

q = Fraction(31, 30)
for v in places_of(q):
    print(f"|{q}|_{v} = {absolute_value(q, v)}")
print("product over all places:", product_formula_check(q))


# Valuations count prime factors with sign; the absolute value is `p^-v`.

# In[3]:

print(valuation(Fraction(5, 9), 3), absolute_value(Fraction(5, 9), Place.finite(3)))


# ## Why finitely many primes is impossible
#
# Suppose the primes were exactly 2, 3 and 5. Then `q = 31/30` exceeds 1 at
# every place we know about, so the product formula could not hold. The
# witness shows which place was left out.

# In[4]:

w = euclid_witness([2, 3, 5])
print("q =", w.q)
print("product over S and infinity:", w.partial_product)
for v, a in w.missing:
    print(f"missing place {v} contributes {a}")
print("global product:", w.global_product)


# In[5]:

# a larger set: P + 1 is factored by Pollard rho once trial division runs out
w = euclid_witness([101, 103, 107, 109, 113, 127, 131, 137])
print([str(v) for v, _ in w.missing], w.global_product, abs(w.q) > 1)
