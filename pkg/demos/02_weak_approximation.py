# coding: utf-8

# # Weak approximation on the rationals
#
# Given targets at finitely many places, find one rational close to all of
# them at once. p-adic closeness is congruence modulo a power of p, so the
# finite conditions are glued by the Chinese remainder theorem. The real
# condition is then met by a shift that is tiny at infinity and p-adically
# harmless.

# In[1]:

from fractions import Fraction

from primeplaces import crt, weak_approximate


# In[2]:

print(crt([1, 2], [4, 9]))


# In[3]:

cert = weak_approximate([("2", 1), ("3", 0)], Fraction(1, 4))
print("q =", cert.q)
for item in cert.items:
    print(item.place, item.target, item.achieved, "<", item.epsilon, item.ok)


# Add the archimedean place: now q must also sit near 100 on the real line.

# In[4]:

cert = weak_approximate([("2", 1), ("3", 0), ("inf", 100)], Fraction(1, 4))
print("q =", cert.q, float(cert.q))
print(all(item.ok for item in cert.items))


# In[5]:

# tighter tolerance, rational targets
cert = weak_approximate([("5", Fraction(1, 3)), ("7", -2), ("inf", Fraction(-22, 7))],
                        Fraction(1, 10**6))
print(cert.q)
print([(str(i.place), str(i.achieved)) for i in cert.items], cert.ok)
