import itertools

import pytest
from hypothesis import given, settings, strategies as st

from thetagraph.gf import field_of_order
from thetagraph.subspace import (
    Matrix,
    Subspace,
    all_subspaces,
    contains,
    enumerate_subspaces,
    image,
    intersect,
    kernel,
    q_binomial,
    rref,
    subspace_sum,
)

F2 = field_of_order(2)
F3 = field_of_order(3)


def test_rref_small():
    M = Matrix.from_rows(F3, [[2, 1, 0], [1, 2, 0], [0, 0, 1]])
    R, r = rref(M)
    assert r == 2
    assert R.rows == ((1, 2, 0), (0, 0, 1), (0, 0, 0))


def test_inverse_and_singular():
    A = Matrix.from_rows(F3, [[1, 2], [0, 1]])
    assert A @ A.inverse() == Matrix.identity(F3, 2)
    with pytest.raises(ZeroDivisionError):
        Matrix.from_rows(F3, [[1, 2], [2, 1]]).inverse()


def test_image_kernel_rank_nullity():
    for rows in itertools.product(range(3), repeat=4):
        A = Matrix.from_rows(F3, [rows[:2], rows[2:]])
        assert image(A).dim + kernel(A).dim == 2
        for v in kernel(A).vectors():
            assert not any(A.apply(v))


def test_lattice_operations():
    e1 = Subspace.span(F2, 3, [(1, 0, 0)])
    e2 = Subspace.span(F2, 3, [(0, 1, 0)])
    plane = subspace_sum(e1, e2)
    assert plane.dim == 2
    assert contains(plane, e1) and not contains(e1, plane)
    assert intersect(plane, Subspace.span(F2, 3, [(1, 1, 1), (0, 0, 1)])).basis == ((1, 1, 0),)
    assert intersect(e1, e2).dim == 0


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_counts(n, q):
    F = field_of_order(q)
    for k in range(n + 1):
        subs = enumerate_subspaces(n, k, F)
        assert len(subs) == q_binomial(n, k, q)
        assert len(set(subs)) == len(subs)
        assert all(S.dim == k for S in subs)


def test_enumeration_is_canonical():
    for S in all_subspaces(3, F3):
        assert Subspace.span(F3, 3, S.basis) == S
        # any spanning set reaches the same basis
        assert Subspace.span(F3, 3, list(S.vectors())) == S


def test_q_binomial_identities():
    for q in (2, 3, 4, 5):
        for n in range(8):
            for k in range(n + 1):
                assert q_binomial(n, k, q) == q_binomial(n, n - k, q)
                if 0 < k < n:
                    rec = q_binomial(n - 1, k - 1, q) + q ** k * q_binomial(n - 1, k, q)
                    assert q_binomial(n, k, q) == rec
    assert q_binomial(60, 30, 7) > 2 ** 64


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), max_size=4),
       st.lists(st.lists(st.integers(0, 2), min_size=4, max_size=4), max_size=4))
def test_grassmann_identity(a, b):
    A, B = Subspace.span(F3, 4, a), Subspace.span(F3, 4, b)
    assert subspace_sum(A, B).dim + intersect(A, B).dim == A.dim + B.dim
    assert contains(A, intersect(A, B)) and contains(subspace_sum(A, B), B)


def test_map_and_json():
    S = Subspace.span(F3, 2, [(1, 1)])
    A = Matrix.from_rows(F3, [[0, 1], [1, 0]])
    assert S.map(A) == S
    assert Subspace.from_json(F3, S.to_json()) == S
