import itertools

import numpy as np
import pytest

from thetagraph.gf import (
    FieldSpec,
    automorphisms,
    field_of_order,
    is_irreducible,
    make_field,
    prime_power,
)


def test_prime_power():
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    for bad in (1, 6, 12, 0):
        with pytest.raises(ValueError):
            prime_power(bad)


def test_gf4_and_gf9_moduli():
    F4 = field_of_order(4)
    # x^2 + x + 1: x*x = x + 1
    assert F4.mul(2, 2) == 3
    assert F4.add(2, 3) == 1
    F9 = field_of_order(9)
    # x^2 + 1: x*x = -1 = 2
    assert F9.mul(3, 3) == 2
    assert is_irreducible(list(F9.modulus), 3)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16])
def test_field_axioms(q):
    F = field_of_order(q)
    A, M = F.add_table, F.mul_table
    idx = np.arange(q)
    assert np.array_equal(A, A.T) and np.array_equal(M, M.T)
    assert np.array_equal(A[0], idx) and np.array_equal(M[1], idx)
    for a in range(q):
        assert np.array_equal(A[A[a]], A[a][A])
        assert np.array_equal(M[M[a]], M[a][M])
        assert np.array_equal(M[a][A], A[M[a][:, None], M[a][None, :]])
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_field_element_operators():
    F = field_of_order(5)
    a, b = F.element(2), F.element(4)
    assert int(a + b) == 1
    assert int(a * b) == 3
    assert int(a / b) == int(a * b.inverse())
    assert int(a ** 4) == 1
    assert int(-a) == 3


@pytest.mark.parametrize("q", [2, 4, 8, 9, 25])
def test_automorphisms(q):
    F = field_of_order(q)
    sig = automorphisms(F)
    assert len(sig) == F.m
    assert sig[0] == tuple(range(q))
    for s in sig:
        for a, b in itertools.product(range(q), repeat=2):
            assert s[F.add(a, b)] == F.add(s[a], s[b])
            assert s[F.mul(a, b)] == F.mul(s[a], s[b])


def test_json_roundtrip_and_equality():
    F = make_field(2, 3)
    assert FieldSpec.from_json(F.to_json()) == F
    assert hash(FieldSpec.from_json(F.to_json())) == hash(F)


def test_order_limit():
    with pytest.raises(OverflowError):
        field_of_order(2 ** 17)
