#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import os
import sys
from unittest import mock

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.constant import BT, BV, UNBOUNDED, F, T, V  # noqa
from ore_thompson.forest_cat import Forest, normal_form  # noqa
from ore_thompson.fraction_groups import (  # noqa
    CertificateFailedError,
    FamilyMismatchError,
    FractionElement,
    eq,
    expand,
    identity,
    inv,
    is_identity,
    mul,
    order,
    power,
    project_to_v,
    random_element,
    reduce,
)
from ore_thompson.unit_groupoids import Braid, Permutation, Rotation, is_cyclic  # noqa
from ore_thompson.utils import seeded_random  # noqa

PROPERTY_SETTINGS = settings(derandomize=True, max_examples=60, deadline=None)

CARET = Forest.caret(1, 1)
COMB = normal_form((1, 1), 1)


def element(family, num, unit, den):
    return FractionElement(family, num, unit, den)


def random_triple(family, seed, base=1, arity=2):
    rng = seeded_random(seed)
    return [random_element(family, rng, max_leaves=6, base=base, arity=arity, braid_length=4) for _ in range(3)]


def test_expand_by_caret():
    """Test that expanding the transposition moves the caret to the second leaf"""
    x = element(V, CARET, Permutation((2, 1)), CARET)
    expanded = expand(x, Forest.caret(1, 2))
    assert expanded.num.word == (1, 2)
    assert expanded.unit == Permutation((2, 3, 1))
    assert expanded.den.word == (1, 1)
    assert eq(x, expanded)


def test_expand_rejects_misfit_forest():
    x = element(V, CARET, Permutation((2, 1)), CARET)
    with pytest.raises(ValueError):
        expand(x, Forest.caret(1, 3))


def test_element_rejects_leaf_disagreement():
    with pytest.raises(ValueError):
        element(V, CARET, Permutation.identity(3), CARET)
    with pytest.raises(ValueError):
        element(T, CARET, Permutation((2, 1)), CARET)


def test_identity_forms():
    """Test that any fraction f * 1 * f^-1 is the identity"""
    assert is_identity(identity(V))
    assert is_identity(element(V, COMB, Permutation.identity(3), COMB))
    assert is_identity(element(T, COMB, Rotation.identity(3), COMB))
    assert not is_identity(element(V, CARET, Permutation((2, 1)), CARET))
    assert not is_identity(element(F, COMB, Permutation.identity(3), normal_form((1, 2), 1)))


def test_eq_across_denominators():
    """Test that the same element written over different denominators is equal"""
    x = element(F, COMB, Permutation.identity(3), normal_form((1, 2), 1))
    y = expand(x, Forest.caret(2, 3))
    assert eq(x, y)
    assert eq(y, x)
    assert not eq(x, inv(x))


def test_family_mismatch():
    with pytest.raises(FamilyMismatchError):
        mul(identity(V), identity(T))
    with pytest.raises(FamilyMismatchError):
        eq(identity(V, base=1), identity(V, base=2))
    with pytest.raises(FamilyMismatchError):
        eq(identity(V, arity=2), identity(V, arity=3))


def test_mul_with_inverse():
    x = element(V, COMB, Permutation((3, 1, 2)), normal_form((1, 2), 1))
    assert is_identity(mul(x, inv(x)))
    assert is_identity(mul(inv(x), x))
    assert eq(mul(identity(V), x), x)


def test_mul_generators_of_f():
    """Test that x0 squared is the fraction of two four-leaf trees"""
    x0 = element(F, COMB, Permutation.identity(3), normal_form((1, 2), 1))
    square = mul(x0, x0)
    expected = element(F, normal_form((1, 1, 1), 1), Permutation.identity(4), normal_form((1, 2, 3), 1))
    assert eq(square, expected)


@pytest.mark.parametrize(
    "x, expected",
    [
        (element(T, COMB, Rotation(3, 1), COMB), 3),
        (element(T, normal_form((1, 1, 1), 1), Rotation(4, 1), normal_form((1, 1, 1), 1)), 4),
        (element(V, CARET, Permutation((2, 1)), CARET), 2),
        (element(V, COMB, Permutation((2, 3, 1)), COMB), 3),
        (element(BV, CARET, Braid(2, (1,)), CARET), UNBOUNDED),
        (identity(BV), 1),
    ],
)
def test_order(x, expected):
    assert order(x, 8) == expected


def test_order_needs_positive_bound():
    with pytest.raises(ValueError):
        order(identity(V), 0)


def test_power():
    x = element(V, COMB, Permutation((2, 3, 1)), COMB)
    assert is_identity(power(x, 0))
    assert eq(power(x, -1), inv(x))
    assert eq(power(x, 2), mul(x, x))
    assert is_identity(power(x, 3))


def test_reduce_cancels_expansion():
    """Test that reduction undoes a caret expansion of the transposition"""
    x = element(V, CARET, Permutation((2, 1)), CARET)
    reduced = reduce(expand(x, Forest.caret(1, 2)))
    assert reduced.carets == 2
    assert eq(reduced, x)


def test_reduce_examples():
    assert reduce(element(T, COMB, Rotation.identity(3), COMB)).carets == 0
    assert reduce(element(F, COMB, Permutation.identity(3), normal_form((1, 2), 1))).carets == 4


def test_reduce_spells_braids_canonically():
    """Test that reduction writes a braided unit in its canonical word"""
    x = element(BV, CARET, Braid(2, (1, 1, -1)), CARET)
    assert reduce(x).unit.word == (1,)
    assert reduce(element(BV, COMB, Braid(3, (1, -1, 2, -2)), COMB)).unit.word == ()


@given(seed=st.integers(min_value=0, max_value=10 ** 6))
@PROPERTY_SETTINGS
def test_reduce_forgets_cancelled_factor(seed):
    """Test that x y y^-1 and x reduce to the same fraction whenever their forests agree"""
    x, y, _ = random_triple(BV, seed)
    roundtrip, reduced = reduce(mul(mul(x, y), inv(y))), reduce(x)
    assert eq(roundtrip, reduced)
    if roundtrip.num == reduced.num and roundtrip.den == reduced.den:
        assert roundtrip.to_json() == reduced.to_json()


def test_project_to_v():
    x = element(BV, CARET, Braid(2, (1,)), CARET)
    projected = project_to_v(x)
    assert projected.family == V
    assert projected.unit == Permutation((2, 1))
    assert order(projected, 4) == 2
    cyclic = project_to_v(element(BT, COMB, Braid(3, (1, 2)), COMB))
    assert cyclic.family == T
    assert cyclic.unit == Rotation(3, 1)
    with pytest.raises(FamilyMismatchError):
        project_to_v(identity(V))


def test_certified_product():
    x, y = random_triple(V, 11)[:2]
    assert eq(mul(x, y, certify=True), mul(x, y))


def test_failed_certificate_raises():
    """Test that a product failing its round trip raises CertificateFailedError"""
    x = element(V, CARET, Permutation((2, 1)), CARET)
    with mock.patch("ore_thompson.fraction_groups.eq", return_value=False):
        with pytest.raises(CertificateFailedError):
            mul(x, x, certify=True)


@pytest.mark.parametrize("family", [F, T, V, BV, BT])
def test_random_elements_belong_to_family(family):
    rng = seeded_random(3)
    for _ in range(20):
        x = random_element(family, rng, max_leaves=6)
        assert x.table.is_member(x.unit)
        assert x.num.leaves == x.den.leaves
        if family == BT:
            assert is_cyclic(x.unit)


@pytest.mark.parametrize("family", [F, T, V, BV])
@given(seed=st.integers(min_value=0, max_value=10 ** 6))
@PROPERTY_SETTINGS
def test_group_laws(family, seed):
    """Test associativity, inverses and the identity on random triples"""
    x, y, z = random_triple(family, seed)
    assert eq(mul(mul(x, y), z), mul(x, mul(y, z)))
    assert is_identity(mul(x, inv(x)))
    assert eq(mul(identity(family), x), x)
    assert eq(mul(x, identity(family)), x)


@given(seed=st.integers(min_value=0, max_value=10 ** 6))
@PROPERTY_SETTINGS
def test_group_laws_in_higman_thompson_group(seed):
    """Test the group laws of V with ternary carets over two roots"""
    x, y, z = random_triple(V, seed, base=2, arity=3)
    assert eq(mul(mul(x, y), z), mul(x, mul(y, z)))
    assert is_identity(mul(inv(x), x))


@given(seed=st.integers(min_value=0, max_value=10 ** 6))
@PROPERTY_SETTINGS
def test_reduce_keeps_element(seed):
    x = random_triple(V, seed)[0]
    reduced = reduce(x)
    assert eq(reduced, x)
    assert reduced.carets <= x.carets


@given(seed=st.integers(min_value=0, max_value=10 ** 6))
@PROPERTY_SETTINGS
def test_projection_is_homomorphism(seed):
    """Test that pi(xy) = pi(x) pi(y) for braided elements"""
    x, y, _ = random_triple(BV, seed)
    assert eq(project_to_v(mul(x, y)), mul(project_to_v(x), project_to_v(y)))
