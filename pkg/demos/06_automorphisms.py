import numpy as np

from thetagraph import automorphisms, build, field_of_order
from thetagraph import theta_matrix as tm

F4 = field_of_order(4)
T = build(2, F4)
rng = np.random.default_rng(1)
A = tm.random_invertible(2, F4, rng)
frob = automorphisms(F4)[1]
perm = tm.induced_automorphism(A, frob, T)
print(A.rows, tm.is_automorphism(T.graph, perm))

# over F_5 a transposition of two lines is an automorphism,
# but no (A, sigma) moves vertices that way
T5 = build(2, 5)
perm = tm.exotic_automorphism_n2([1, 0, 2, 3, 4, 5], T5)
search = tm.find_inducing_pair(perm, T5)
print(search.induced_by, search.pairs_checked, search.distinct_maps)
