# -*- coding: utf-8 -*-
"""
planeforge: blocking sets in finite projective planes.
Copyright (c) planeforge developers.
Distributed under the terms of the MIT License.

Tests of the Galois field arithmetic
------------------------------------
"""
import itertools

import numpy as np
from numpy.testing import assert_equal, assert_array_equal

import pytest

from planeforge.exceptions import (NotPrimeError, DegreeError,
                                   FieldTooLargeError, FieldZeroDivisionError,
                                   DomainError, UsageError)
from planeforge.field.gf import (field_new, field_from_order, is_irreducible,
                                 smallest_irreducible, factor_prime_power,
                                 add, mul, neg, inv, sub, div)

gf3 = field_new(3, 1)
gf4 = field_new(2, 2)
gf5 = field_new(5, 1)

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2),
                (11, 1), (13, 1), (2, 4)]


def test_prime_field_has_empty_modulus():
    assert_equal(gf3.q, 3)
    assert_equal(gf3.modulus, ())


def test_gf4_modulus():
    # x^2 + x + 1, constant term first
    assert_equal(gf4.modulus, (1, 1, 1))
    assert_equal(gf4.modulus_str(), "x^2 + x + 1")


def test_known_moduli():
    # x^3 + x^2 + 1 comes before x^3 + x + 1 comparing from the constant term
    assert_equal(field_new(2, 3).modulus, (1, 0, 1, 1))
    # x^2 + 1 is irreducible over GF(3)
    assert_equal(field_new(3, 2).modulus, (1, 0, 1))
    assert_equal(field_new(2, 4).modulus, (1, 0, 0, 1, 1))


def test_invalid_parameters():
    with pytest.raises(NotPrimeError):
        field_new(4, 1)
    with pytest.raises(NotPrimeError):
        field_new(1, 1)
    with pytest.raises(DegreeError):
        field_new(3, 0)
    with pytest.raises(FieldTooLargeError):
        field_new(2, 17)
    with pytest.raises(FieldTooLargeError):
        field_new(257, 2)


def test_validation_errors_are_value_errors():
    with pytest.raises(ValueError):
        field_new(6, 1)


def test_worked_examples():
    assert_equal(add(gf3.element(2), gf3.element(2)), gf3.element(1))
    assert_equal(mul(gf4.element(2), gf4.element(2)), gf4.element(3))
    assert_equal(inv(gf5.element(2)), gf5.element(3))


def test_inverse_of_zero():
    with pytest.raises(FieldZeroDivisionError):
        inv(gf5.zero)
    # also a DomainError
    with pytest.raises(DomainError):
        gf4.element(3) / gf4.zero


def test_mixed_fields():
    with pytest.raises(UsageError):
        add(gf3.one, gf5.one)
    with pytest.raises(UsageError):
        gf3.one * 2


def test_element_out_of_range():
    with pytest.raises(DomainError):
        gf4.element(4)


def test_operators_agree_with_functions():
    a, b = gf4.element(2), gf4.element(3)
    assert_equal(sub(a, b), a + neg(b))
    assert_equal(div(a, b) * b, a)
    assert_equal(a ** 3, gf4.one)
    assert_equal(a ** -1, inv(a))
    assert_equal(a.coefficients, (0, 1))


@pytest.mark.parametrize("p, e", SMALL_FIELDS)
def test_field_axioms(p, e):
    gf = field_new(p, e)
    q = gf.q
    idx = np.arange(q)
    A = gf.add_table
    M = gf.mul_table

    # identities
    assert_array_equal(A[0], idx)
    assert_array_equal(M[1], idx)
    assert_array_equal(M[0], np.zeros(q))
    # commutativity
    assert_array_equal(A, A.T)
    assert_array_equal(M, M.T)
    # associativity
    a, b, c = np.meshgrid(idx, idx, idx, indexing='ij')
    assert_array_equal(A[A[a, b], c], A[a, A[b, c]])
    assert_array_equal(M[M[a, b], c], M[a, M[b, c]])
    # distributivity
    assert_array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]])
    # additive inverses
    assert_array_equal(A[idx, gf.neg_idx(idx)], np.zeros(q))
    # every row of the additive and multiplicative groups is a permutation
    for row in A:
        assert_array_equal(np.sort(row), idx)
    for row in M[1:, 1:]:
        assert_array_equal(np.sort(row), idx[1:])


@pytest.mark.parametrize("p, e", SMALL_FIELDS)
def test_unique_inverses(p, e):
    gf = field_new(p, e)
    nonzero = np.arange(1, gf.q)
    inverses = gf.inv_idx(nonzero)
    assert_array_equal(gf.mul_idx(nonzero, inverses), np.ones(gf.q - 1))
    assert_equal(len(set(inverses.tolist())), gf.q - 1)


@pytest.mark.parametrize("p, e", SMALL_FIELDS)
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(p, e):
    gf = field_new(p, e)
    x = gf.primitive_element
    powers = {int(x ** k) for k in range(gf.q - 1)}
    assert_equal(powers, set(range(1, gf.q)))
    assert_equal(x ** (gf.q - 1), gf.one)


def test_modulus_is_smallest_irreducible():
    for p, e in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)]:
        modulus = field_new(p, e).modulus
        assert is_irreducible(modulus, p)
        for low in itertools.product(range(p), repeat=e):
            if low == modulus[:-1]:
                break
            assert not is_irreducible(list(low) + [1], p)


def test_deterministic_construction():
    first = smallest_irreducible(3, 3)
    second = smallest_irreducible(3, 3)
    assert_equal(first, second)
    assert field_new(3, 3) is field_new(3, 3)


def test_tables_built_with_field():
    gf256 = field_new(2, 8)
    # the same arrays are handed out on every access
    assert gf256.mul_table is gf256.mul_table
    assert_equal(gf256.add_table.shape, (256, 256))
    assert_equal(gf256.mul_table[3, gf256.inv_table[3]], 1)

    gf512 = field_new(2, 9)
    assert_equal(gf512.mul_idx(5, gf512.inv_table[5]), 1)
    with pytest.raises(UsageError):
        gf512.mul_table
    with pytest.raises(UsageError):
        gf512.add_table


def test_field_from_order():
    assert_equal(field_from_order(9), field_new(3, 2))
    assert_equal(factor_prime_power(8), (2, 3))
    with pytest.raises(NotPrimeError):
        field_from_order(6)
    with pytest.raises(NotPrimeError):
        field_from_order(1)


@pytest.mark.parametrize("p, e", [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2)])
def test_tables_against_galois(p, e):
    galois = pytest.importorskip("galois")
    gf = field_new(p, e)
    modulus = galois.Poly(list(reversed(gf.modulus)), field=galois.GF(p))
    GF = galois.GF(p ** e, irreducible_poly=modulus)
    x = GF(np.arange(gf.q))
    expected_add = np.asarray(x[:, None] + x[None, :], dtype=np.int64)
    expected_mul = np.asarray(x[:, None] * x[None, :], dtype=np.int64)
    assert_array_equal(gf.add_table, expected_add)
    assert_array_equal(gf.mul_table, expected_mul)
