import itertools
import random

import pytest

from thetagraph.digraph import CapacityError
from thetagraph.gf import automorphisms, field_of_order
from thetagraph.subspace import Matrix, Subspace, contains, q_binomial
from thetagraph import theta_matrix as tm

F2, F3 = field_of_order(2), field_of_order(3)


@pytest.fixture(scope="module")
def t22():
    return tm.build(2, F2)


@pytest.fixture(scope="module")
def t32():
    return tm.build(3, F2)


def test_formulas():
    assert [tm.vertex_count_formula(n, q) for n, q in [(2, 2), (2, 3), (3, 2), (3, 3)]] == [11, 18, 100, 340]
    assert tm.degree_formula(2, 0, 2) == 1
    assert tm.degree_formula(2, 2, 2) == 11
    assert tm.clique_size_formula(3, 1, 2) == 4
    assert tm.max_directed_clique(4, 2)[1] == (2,)
    assert tm.max_directed_clique(3, 2) == (4, (1, 2))


def test_vertex_order(t22):
    z, o = t22.vertices[0], t22.vertices[-1]
    assert (z.V.dim, z.W.dim) == (0, 2)
    assert (o.V.dim, o.W.dim) == (2, 0)
    assert t22.zero_vertex == 0 and t22.one_vertex == len(t22) - 1
    assert [v.V.dim for v in t22.vertices] == sorted(v.V.dim for v in t22.vertices)


def test_arc_rule_matches_matrix_products():
    T = tm.build(2, F3)
    mats = [tm.matrix_of_vertex(v) for v in T.vertices]
    for (i, A), (j, B) in itertools.product(enumerate(mats), repeat=2):
        assert T.graph.has_arc(i, j) == (A @ B).is_zero()


def test_matrix_roundtrip(t32):
    for v in t32.vertices:
        assert tm.vertex_of_matrix(tm.matrix_of_vertex(v)) == v


def test_op_swaps(t32):
    for v in t32.vertices:
        assert v.op().op() == v
        assert t32.graph.has_arc(t32.id(v), t32.id(v.op()))


def test_cap():
    with pytest.raises(CapacityError):
        tm.build(4, F2, cap=100)


def test_layer_cycles():
    # the cycle for (k, n-k) runs through both layers S_{k,n-k} and S_{n-k,k}
    for n in (2, 3, 4):
        for q in (2, 3, 4, 5):
            if tm.vertex_count_formula(n, q) > 20000:
                continue
            F = field_of_order(q)
            T = tm.build(n, F)
            for k in range(1, n):
                cyc = tm.cycle_for_partition(n, F, k, n - k)
                ids = T.ids(cyc)
                ok, msg = tm.validate_walk(T.graph, ids, True, T.layer(k, n - k) + T.layer(n - k, k))
                assert ok, (n, q, k, msg)


def test_walk_validator_rejects():
    T = tm.build(2, F2)
    kind, seq = tm.hamiltonian(2, F2)
    ids = T.ids(seq)
    inner = [v for v in range(len(T)) if v not in (T.zero_vertex, T.one_vertex)]
    assert tm.validate_walk(T.graph, ids, True, inner)[0]
    assert not tm.validate_walk(T.graph, ids[:-1], True, inner)[0]
    assert not tm.validate_walk(T.graph, ids + ids[:1], True, inner)[0]
    assert not tm.validate_walk(T.graph.without_arc(ids[0], ids[1]), ids, True, inner)[0]


def test_no_cycle_witness_n5():
    w = tm.no_hamiltonian_cycle_witness(5, F2)
    assert w["removed"] == 31 ** 2
    assert w["holds"]


def test_cliques_are_KU(t32):
    for k in range(4):
        for U in t32.by_dim[k]:
            K = tm.clique_K(U, t32)
            assert tm.is_directed_clique(t32.graph, K.members)
            assert len(K.members) == tm.clique_size_formula(3, k, 2)


def test_domination_exhaustive_n2():
    for q in (2, 3):
        rep = tm.domination_report(tm.build(2, q), exhaustive=True)
        assert rep["pass"] and rep["minimality"] == "exhaustive"


def test_characterization_33():
    T = tm.build(3, F3)
    assert tm.characterization_holds(tm.verify_characterization(T.graph, 3, 3))


def test_characterization_fails_on_wrong_parameters(t22):
    rep = tm.verify_characterization(t22.graph, 3, 2)
    assert not tm.characterization_holds(rep)


def test_closure_lattice_formula(t32):
    rng = random.Random(2)
    G = t32.graph
    for _ in range(40):
        X = rng.sample(range(len(t32)), rng.randint(1, 4))
        t, s = tm.closure_of_set(t32, X)
        mask = sum(1 << x for x in X)
        assert t == G.cl_t_mask(mask)
        assert s == G.cl_s_mask(mask)


def test_semilinear_automorphisms():
    F4 = field_of_order(4)
    T = tm.build(2, F4)
    sig = automorphisms(F4)
    A = Matrix.from_rows(F4, [[1, 2], [0, 1]])
    for s in sig:
        perm = tm.induced_automorphism(A, s, T)
        assert tm.is_automorphism(T.graph, perm)
    ident = tm.induced_automorphism(Matrix.identity(F4, 2), sig[0], T)
    assert ident == list(range(len(T)))
    with pytest.raises(ValueError):
        tm.induced_automorphism(Matrix.zeros(F4, 2), sig[0], T)


def test_exotic_absent_for_small_q():
    # over F_3 every line permutation is induced by PGL(2, 3) = S_4
    T = tm.build(2, F3)
    perm = tm.exotic_automorphism_n2([1, 0, 2, 3], T)
    assert tm.find_inducing_pair(perm, T).induced_by is not None


def test_lines_subspace_checks():
    L = Subspace.span(F2, 2, [(1, 1)])
    with pytest.raises(ValueError):
        tm.PairVertex(L, Subspace.full(F2, 2))
    assert contains(Subspace.full(F2, 2), L)
    assert q_binomial(2, 1, 2) == 3
