# coding: utf-8

# # Smooth numbers and the reciprocal tail
#
# `P_r` is the set of positive integers whose prime factors are among the
# first r primes. At most `N / p` integers up to N are divisible by a given
# prime p, so the count of `P_r` up to N is at least
# `N (1 - sum_{j > r} 1/p_j)`. If the sum of prime reciprocals converged,
# some r would make the tail below 1/2 forever and `P_r` would have positive
# upper density.

# In[1]:

import numpy as np

from primeplaces import (
    density_profile,
    erdos_defect_profile,
    minimal_r_for_tail,
    smooth_members,
)
from primeplaces.report import render_rational


# In[2]:

print(smooth_members(3, 100).tolist())


# In[3]:

rep = density_profile(4, [10**e for e in range(1, 6)])
for row in rep.rows:
    print(row.N, row.count, render_rational(row.ratio, 4), render_rational(row.lower_bound, 4),
          row.bound_holds)


# The defect `N - #P_r(N)` against its bound, for every N up to a million.

# In[4]:

prof = erdos_defect_profile(3, 10**6)
print("holds everywhere:", prof.holds)
slack = prof.bound - prof.defect
print("smallest slack past 100:", int(slack[100:].min()))


# The r needed to push the tail under 1/2 keeps growing with the cut-off:
# the finite-scale shadow of divergence.

# In[5]:

bounds = [10**e for e in range(2, 8)]
rs = np.array([minimal_r_for_tail(B) for B in bounds])
print(dict(zip(bounds, rs.tolist())))
print(np.all(np.diff(rs) >= 0))
