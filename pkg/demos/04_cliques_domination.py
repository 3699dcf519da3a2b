from thetagraph import build, field_of_order
from thetagraph import theta_matrix as tm

T = build(3, 2)
size, cliques = tm.maximum_directed_cliques(T.graph)
print("largest directed clique:", size, "formula:", tm.max_directed_clique(3, 2))
for c in cliques[:3]:
    print(sorted(c), [T.vertices[v] for v in sorted(c)])

# K(U) for a plane U
U = T.by_dim[2][0]
print(U, tm.clique_K(U, T))

for n, q in [(2, 2), (2, 3), (3, 2)]:
    rep = tm.domination_report(build(n, field_of_order(q)))
    print(n, q, rep["size"], rep["minimality"], rep["pass"])
