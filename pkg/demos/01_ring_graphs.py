# Compressed zero-divisor graphs of a few small rings.
from thetagraph import ring_zmod, ring_matrix, ring_product, theta_classes, theta_graph, units

Z12 = ring_zmod(12)
print("units of Z/12:", sorted(units(Z12)))

for c in theta_classes(Z12):
    print(c.representative, c.members)

G = theta_graph(Z12)
print(G)
print(G.to_dot())

# 2x2 matrices over F_2: 16 elements but only 11 classes
M = ring_matrix(2, 2)
print(len(theta_classes(M)), "classes in M_2(F_2)")
for v in range(theta_graph(M).n):
    print(v, theta_graph(M).labels[v])

P = ring_product([ring_zmod(2), ring_zmod(3)])
print(P, "->", theta_graph(P).arcs())
