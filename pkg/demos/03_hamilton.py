# Hamiltonian cycles through the non-trivial classes, and why n = 4 only gets a path.
from thetagraph import build, field_of_order
from thetagraph import theta_matrix as tm

for n, q in [(2, 2), (2, 3), (3, 2), (4, 2)]:
    F = field_of_order(q)
    T = build(n, F)
    kind, seq = tm.hamiltonian(n, F)
    ids = T.ids(seq)
    inner = [v for v in range(len(T)) if v not in (T.zero_vertex, T.one_vertex)]
    print(n, q, kind, len(ids), tm.validate_walk(T.graph, ids, kind == "cycle", inner))

print(tm.hamiltonian(2, field_of_order(2))[1])

# deleting [0], [1] and the (1, n-1) layers leaves too many pieces for a cycle
for n in (4, 5):
    print(tm.no_hamiltonian_cycle_witness(n, field_of_order(2)))
