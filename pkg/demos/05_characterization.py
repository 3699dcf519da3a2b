# Recognising the matrix graphs from the digraph alone.
import random

from thetagraph import build, type_partition
from thetagraph import theta_matrix as tm

T = build(3, 2)
G = T.graph
tp = type_partition(G)
print("outdegree classes:", tp.degrees, [len(c) for c in tp.classes])

rep = tm.verify_characterization(G, 3, 2)
for key, r in rep.items():
    print(key, r["pass"])

# one arc more or less and something breaks
rng = random.Random(0)
u, v = rng.randrange(G.n), rng.randrange(G.n)
H = G.without_arc(u, v) if G.has_arc(u, v) else G.with_arc(u, v)
rep = tm.verify_characterization(H, 3, 2)
print([(k, r["witness"]) for k, r in rep.items() if not r["pass"]])

# closures on the subspace lattice agree with N+(N-(X))
X = [3, 17, 40]
t, s = tm.closure_of_set(T, X)
print(t == G.cl_t_mask(sum(1 << x for x in X)), bin(t).count("1"))
