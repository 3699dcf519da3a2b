import random

import pytest

from thetagraph.digraph import (
    CapacityError,
    Digraph,
    PropertyViolation,
    cl_s,
    cl_t,
    is_isomorphism,
    isomorphic_small,
    n_minus,
    n_plus,
    opposite_vertex,
    tensor_product,
    type_partition,
    undirected_components,
)
from thetagraph.gf import field_of_order
from thetagraph.theta_matrix import build


def random_digraph(rng, n, p=0.25):
    return Digraph.from_arcs(n, [(u, v) for u in range(n) for v in range(n) if rng.random() < p])


def test_neighbourhoods():
    G = Digraph.from_arcs(4, [(0, 1), (0, 2), (1, 2), (3, 3)])
    assert n_plus(G, [0]) == {1, 2}
    assert n_plus(G, [0, 1]) == {2}
    assert n_minus(G, [2]) == {0, 1}
    assert n_plus(G, []) == set(range(4))
    assert cl_t(G, [2]) == {2}
    assert cl_t(G, [1]) == {1, 2}
    assert cl_s(G, [0]) == {0}
    assert cl_s(G, [1]) == {0, 1}


def test_closure_laws_random():
    rng = random.Random(5)
    for _ in range(100):
        G = random_digraph(rng, 20)
        for _ in range(10):
            X = frozenset(v for v in range(20) if rng.random() < 0.3)
            Y = X | frozenset(v for v in range(20) if rng.random() < 0.2)
            for cl in (cl_t, cl_s):
                c = cl(G, X)
                assert X <= c
                assert cl(G, c) == c
                assert c <= cl(G, Y)
        # intersections of target-closed sets are target-closed
        A, B = cl_t(G, [0, 1]), cl_t(G, [2])
        assert cl_t(G, A & B) == A & B


def test_tensor_product():
    P2 = Digraph.from_arcs(2, [(0, 1), (1, 0)])
    L = Digraph.from_arcs(1, [(0, 0)])
    T = tensor_product(P2, L)
    assert T.arcs() == P2.arcs()
    T = tensor_product(P2, P2)
    assert sorted(T.arcs()) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    rng = random.Random(1)
    for _ in range(10):
        A, B, C = (random_digraph(rng, rng.randint(1, 4), 0.4) for _ in range(3))
        assert isomorphic_small(tensor_product(A, B), tensor_product(B, A)) is not None
        left = tensor_product(tensor_product(A, B), C)
        right = tensor_product(A, tensor_product(B, C))
        assert left == right


def test_type_partition_and_opposite():
    T = build(2, field_of_order(3))
    G = T.graph
    tp = type_partition(G)
    assert tp.degrees == tuple(sorted(tp.degrees, reverse=True))
    assert sum(len(c) for c in tp.classes) == G.n
    for v, pv in enumerate(T.vertices):
        assert opposite_vertex(G, v, tp) == T.id(pv.op())
    u = T.zero_vertex
    w = opposite_vertex(G, u)
    with pytest.raises(PropertyViolation):
        opposite_vertex(G.without_arc(u, w), u)


def test_isomorphism():
    rng = random.Random(9)
    for _ in range(30):
        G = random_digraph(rng, 12, 0.3)
        perm = list(range(12))
        rng.shuffle(perm)
        H = G.relabel(perm)
        m = isomorphic_small(G, H)
        assert m is not None and is_isomorphism(G, H, m)
    G = Digraph.from_arcs(3, [(0, 1), (1, 2)])
    H = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    assert isomorphic_small(G, H) is None
    big = Digraph(2001, [0] * 2001)
    with pytest.raises(CapacityError):
        isomorphic_small(big, big)


def test_components_and_json():
    G = Digraph.from_arcs(5, [(0, 1), (3, 2)])
    assert sorted(map(sorted, undirected_components(G))) == [[0, 1], [2, 3], [4]]
    assert Digraph.from_json(G.to_json()) == G
    assert G.to_dot().startswith("digraph")
