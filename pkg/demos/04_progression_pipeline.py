# coding: utf-8

# # From smooth numbers to powers in progression
#
# Split `P_r` by exponent vector modulo m. Two members of the same class
# differ by an m-th power factor, so dividing a progression inside a class by
# the class representative gives m-th powers in progression. No three cubes
# and no four squares form a progression, so for those routes every class
# must be progression-free. Squares do admit 3-term progressions, which the
# demo route exhibits.

# In[1]:

from primeplaces import (
    decompose,
    find_3ap,
    partition_classes,
    run_pipeline,
    square_3ap_search,
    verify_no_4_square_ap,
    verify_no_cube_ap,
)
from primeplaces.ap import ap_free_max


# In[2]:

part = partition_classes(2, 50, 2)
for cls, members in part.classes.items():
    print(cls.label(), members)
print("densest:", part.densest[0].label(), part.densest[1])


# In[3]:

print(decompose(72, 2), decompose(96, 3))


# In[4]:

demo = run_pipeline("demo", 4, 100)
for cls, w, roots in demo.witnesses[:3]:
    print(cls.label(), w.terms(), "->", [q for q, _ in roots])


# In[5]:

for route in ("cubes", "four-squares"):
    rep = run_pipeline(route, 4, 10**5)
    print(route, rep.smooth_count, rep.nonempty_classes, rep.verdict.value)


# The Diophantine inputs, checked exhaustively at desk scale.

# In[6]:

print(verify_no_cube_ap(2000).holds, verify_no_4_square_ap(2000).holds)
print([w.terms() for w in square_3ap_search(35)][:4])


# Large progression-free sets exist even though every dense set has a
# progression; the exact maxima for small N:

# In[7]:

print([ap_free_max(n)[0] for n in range(1, 21)])
print(find_3ap(range(1, 30, 4)))
