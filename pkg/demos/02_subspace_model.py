# The matrix ring graph built from pairs (image, kernel).
from thetagraph import build, field_of_order, q_binomial
from thetagraph import theta_matrix as tm

F = field_of_order(3)
T = build(2, F)
print(len(T), "vertices, expected", sum(q_binomial(2, i, 3) ** 2 for i in range(3)))

for i, v in enumerate(T.vertices):
    print(i, v, "outdegree", T.graph.outdegree(i))

# pick a vertex, recover a matrix with that image and kernel
v = T.vertices[5]
A = tm.matrix_of_vertex(v)
print(A.rows, tm.vertex_of_matrix(A) == v)

# the op of (V, W) is (W, V)
print(v, "<->", v.op())

T4 = build(4, 2)
hist = {}
for x in range(len(T4)):
    hist[T4.graph.outdegree(x)] = hist.get(T4.graph.outdegree(x), 0) + 1
print(sorted(hist.items(), reverse=True))
