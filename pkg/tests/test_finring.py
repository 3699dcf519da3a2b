import pytest

from thetagraph.digraph import CapacityError, is_isomorphism
from thetagraph.finring import (
    NotAHomomorphism,
    RingAxiomError,
    RingSpec,
    edges_well_defined,
    index_to_matrix,
    matrix_to_index,
    parse_ring,
    product_class_map,
    ring_homomorphisms,
    ring_matrix,
    ring_product,
    ring_zmod,
    theta_classes,
    theta_graph,
    theta_hom,
    units,
)
from thetagraph.subspace import q_binomial


def brute_classes(R):
    """a ~ b iff a = bu = vb for units u, v."""
    U = units(R)
    parts = []
    for a in range(R.size):
        for part in parts:
            b = part[0]
            if any(R.mul(b, u) == a for u in U) and any(R.mul(v, b) == a for v in U):
                part.append(a)
                break
        else:
            parts.append([a])
    return sorted(tuple(p) for p in parts)


def test_units():
    assert units(ring_zmod(6)) == {1, 5}
    assert len(units(ring_matrix(2, 2))) == 6
    assert len(units(ring_matrix(2, 3))) == 48


@pytest.mark.parametrize("desc", ["zmod:6", "zmod:8", "zmod:12", "matrix:2:2",
                                  "product:zmod:2,zmod:4", "zmod:9"])
def test_classes_match_unit_orbits(desc):
    R = parse_ring(desc)
    assert sorted(c.members for c in theta_classes(R)) == brute_classes(R)


def test_small_graphs():
    G = theta_graph(ring_zmod(1))
    assert G.n == 1 and G.has_arc(0, 0)
    for q in (2, 3, 4, 5, 7):
        G = theta_graph(ring_matrix(1, q))
        assert G.n == 2
        assert set(G.arcs()) == {(0, 0), (0, 1), (1, 0)}
    G = theta_graph(ring_zmod(4))
    # classes {0}, {1,3}, {2}; 2*2 = 0
    assert G.n == 3 and G.has_arc(2, 2) and not G.has_arc(1, 2)


def test_edges_well_defined():
    for n in range(1, 31):
        assert edges_well_defined(ring_zmod(n))
    assert edges_well_defined(ring_matrix(2, 2))
    assert edges_well_defined(ring_product([ring_zmod(2), ring_zmod(4)]))


def test_matrix_class_count_formula():
    for n, q in [(1, 2), (2, 2), (2, 3), (2, 4)]:
        want = sum(q_binomial(n, i, q) ** 2 for i in range(n + 1))
        assert len(theta_classes(ring_matrix(n, q))) == want


def test_matrix_index_roundtrip():
    R = ring_matrix(2, 3)
    for a in range(R.size):
        assert matrix_to_index(R, index_to_matrix(R, a)) == a
    assert R.format(R.one) == [[1, 0], [0, 1]]


def test_product_ring_order():
    P = ring_product([ring_zmod(2), ring_zmod(3)])
    assert list(P.split(5)) == [1, 2]
    assert P.combine([1, 2]) == 5
    GP, GT, mapping = product_class_map(P)
    assert is_isomorphism(GP, GT, mapping)


def test_parse_errors():
    for bad in ["zmod:0", "zmod:x", "matrix:2:6", "ring:3", ""]:
        with pytest.raises(ValueError):
            parse_ring(bad)
    with pytest.raises(CapacityError):
        parse_ring("matrix:3:3")


def test_axiom_check_rejects_bad_ring():
    with pytest.raises(RingAxiomError):
        RingSpec(4, lambda a, b: (a + b) % 4, lambda a, b: (a + b) % 4, 0, 1, "bad")


def test_theta_hom():
    z6, z2, z3 = ring_zmod(6), ring_zmod(2), ring_zmod(3)
    proj = [a % 2 for a in range(6)]
    h = theta_hom(proj, z6, z2)
    assert h(0) == 0
    ident = theta_hom(list(range(6)), z6, z6)
    assert ident.vertex_map == tuple(range(ident.source.n))
    assert h.compose(ident).vertex_map == h.vertex_map
    z12 = ring_zmod(12)
    g = theta_hom([a % 6 for a in range(12)], z12, z6)
    direct = theta_hom([a % 2 for a in range(12)], z12, z2)
    assert h.compose(g).vertex_map == direct.vertex_map
    assert ring_homomorphisms(z2, z6) == []
    assert ring_homomorphisms(z6, z3) == [tuple(a % 3 for a in range(6))]
    with pytest.raises(NotAHomomorphism):
        theta_hom([0] * 6, z6, z2)
