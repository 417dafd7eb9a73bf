#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import itertools
import os
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.constant import BV, UNBOUNDED, F, T, V  # noqa
from ore_thompson.unit_groupoids import (  # noqa
    Braid,
    DegreeMismatchError,
    Permutation,
    Rotation,
    StrandMismatchError,
    braid_canonical,
    braid_crossings,
    braid_delta,
    braid_eq,
    braid_inverse,
    braid_lift,
    braid_multiply,
    braid_normal_form,
    braid_project,
    exponent_sum,
    is_cyclic,
    is_pure,
    is_rotation,
    rotation_of,
    unit_group_order,
)

PROPERTY_SETTINGS = settings(derandomize=True, max_examples=150, deadline=None)


@st.composite
def braids(draw, min_strands=2, max_strands=6, max_length=12):
    n = draw(st.integers(min_value=min_strands, max_value=max_strands))
    letters = st.integers(min_value=1, max_value=n - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return Braid(n, tuple(draw(st.lists(letters, max_size=max_length))))


def apply_relation(word, n, position, choice):
    """Applies one defining relation of the braid group at `position`, if one fits"""
    word = list(word)
    if choice == 0:
        letter = position % (n - 1) + 1
        return tuple(word[:position] + [letter, -letter] + word[position:])
    if position + 1 < len(word):
        first, second = word[position], word[position + 1]
        if choice == 1 and abs(abs(first) - abs(second)) >= 2:
            word[position], word[position + 1] = second, first
            return tuple(word)
    if position + 2 < len(word):
        first, second, third = word[position:position + 3]
        if choice == 2 and first == third and first > 0 and second > 0 and abs(first - second) == 1:
            word[position:position + 3] = [second, first, second]
            return tuple(word)
    return tuple(word)


def test_permutation_product_acts_right_first():
    """Test that the right factor of a product acts first"""
    first, second = Permutation.transposition(1, 3), Permutation.transposition(2, 3)
    assert (first * second).img == (2, 3, 1)
    assert (first * second)(1) == first(second(1))


def test_permutation_inverse_and_length():
    permutation = Permutation((3, 1, 2))
    assert (permutation * permutation.inverse()).is_identity()
    assert Permutation((3, 2, 1)).inversions() == 3


def test_permutation_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_degree_mismatch():
    """Test that units of different degrees are not multiplied"""
    with pytest.raises(DegreeMismatchError):
        Permutation.identity(2) * Permutation.identity(3)
    with pytest.raises(DegreeMismatchError):
        Rotation(2, 1) * Rotation(3, 1)


def test_rotation_arithmetic():
    """Test that rotations are stored reduced and embed into permutations"""
    rotation = Rotation(4, 6)
    assert rotation.shift == 2
    assert rotation.to_permutation().img == (3, 4, 1, 2)
    assert (rotation * Rotation(4, 3)).shift == 1
    assert (rotation * rotation.inverse()).is_identity()
    assert rotation_of(Permutation((2, 3, 1))) == Rotation(3, 1)
    assert not is_rotation(Permutation((2, 1, 3)))


def test_braid_relation_has_delta_normal_form():
    """Test that both sides of the braid relation normalize to Delta_3"""
    first, second = Braid(3, (1, 2, 1)), Braid(3, (2, 1, 2))
    assert braid_normal_form(first) == braid_normal_form(second)
    normal = braid_normal_form(first)
    assert normal.power == 1
    assert normal.factors == ()


@pytest.mark.parametrize("n", [2, 3, 5])
def test_free_reduction_is_trivial(n):
    """Test that a generator times its inverse is the identity"""
    assert braid_normal_form(Braid(n, (1, -1))).is_trivial()
    assert braid_normal_form(Braid(n, (-1, 1))).is_trivial()
    assert braid_normal_form(Braid.identity(n)).is_trivial()


def test_delta_crossings():
    """Test that every strand of Delta_4 crosses every other strand once"""
    assert braid_crossings(braid_delta(4)) == 6
    assert braid_crossings(Permutation((4, 3, 2, 1))) == 6
    assert braid_project(braid_delta(4)).img == (4, 3, 2, 1)


def test_crossings_need_a_positive_word():
    """Test that a word with inverse letters is not given a crossing count"""
    with pytest.raises(ValueError):
        braid_crossings(Braid(3, (1, -2)))
    assert exponent_sum(Braid(3, (1, -2, -2))) == -1
    assert exponent_sum(Braid(3, (1, 2, 1))) == braid_crossings(Braid(3, (1, 2, 1)))


@pytest.mark.parametrize(
    "first, second, expected",
    [
        (Braid(4, (1, 3)), Braid(4, (3, 1)), True),
        (Braid(3, (1, 2)), Braid(3, (1, 2)), True),
        (Braid(3, (1, 2)), Braid(3, (2, 1)), False),
        (Braid(3, (1, 1)), Braid.identity(3), False),
    ],
)
def test_braid_eq(first, second, expected):
    assert braid_eq(first, second) is expected
    assert (first == second) is expected


def test_braid_eq_strand_mismatch():
    with pytest.raises(StrandMismatchError):
        braid_eq(Braid(3, (1,)), Braid(4, (1,)))
    with pytest.raises(StrandMismatchError):
        braid_multiply(Braid(3, (1,)), Braid(4, (1,)))


def test_braid_rejects_out_of_range_letter():
    with pytest.raises(ValueError):
        Braid(3, (3,))


def test_braid_inverse_reverses_and_flips():
    assert braid_inverse(Braid(4, (1, -2, 3))).word == (-3, 2, -1)


@given(braids(), st.lists(st.tuples(st.integers(min_value=0, max_value=20), st.integers(0, 2)), max_size=5))
@PROPERTY_SETTINGS
def test_normal_form_is_invariant_under_relations(braid, moves):
    """Test that the defining relations do not change the normal form"""
    expected = braid_normal_form(braid)
    word = braid.word
    for position, choice in moves:
        word = apply_relation(word, braid.n, position % (len(word) + 1), choice)
        assert braid_normal_form(Braid(braid.n, word)) == expected


@given(braids())
@PROPERTY_SETTINGS
def test_product_with_inverse_is_trivial(braid):
    assert (braid * braid.inverse()).is_identity()
    assert (braid.inverse() * braid).is_identity()


@given(braids(), braids())
@PROPERTY_SETTINGS
def test_projection_is_homomorphism(first, second):
    """Test that pi(ab) = pi(a) pi(b)"""
    second = Braid(first.n, tuple(letter for letter in second.word if abs(letter) < first.n))
    assert braid_project(first * second) == braid_project(first) * braid_project(second)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_delta_squared_is_central(n):
    """Test that Delta squared commutes with every generator"""
    square = braid_delta(n) * braid_delta(n)
    for i in range(1, n):
        generator = Braid.generator(i, n)
        assert braid_eq(generator * square, square * generator)


def test_projection_examples():
    assert braid_project(Braid(3, (1,))).img == (2, 1, 3)
    assert braid_project(Braid(3, (-1,))).img == (2, 1, 3)
    assert braid_project(Braid.identity(3)).is_identity()
    assert braid_project(Braid(3, (1, 2))).img == (2, 3, 1)


def test_lift_examples():
    assert braid_lift(Permutation((2, 1))).word == (1,)
    assert braid_lift(Permutation((2, 3, 1))).word == (1, 2)
    assert braid_lift(Permutation.identity(4)).word == ()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_lift_splits_projection(n):
    """Test that pi after lift is the identity on Sym_n"""
    for img in itertools.permutations(range(1, n + 1)):
        permutation = Permutation(img)
        lift = braid_lift(permutation)
        assert braid_project(lift) == permutation
        assert all(letter > 0 for letter in lift.word)
        assert len(lift.word) == permutation.inversions()


@pytest.mark.parametrize("n", [3, 4])
def test_lift_recovers_short_positive_words(n):
    """Test that lift(pi(b)) = b for reduced positive words of length at most 3"""
    for length in range(4):
        for word in itertools.product(range(1, n), repeat=length):
            braid = Braid(n, word)
            if braid_project(braid).inversions() == length:
                assert braid_eq(braid_lift(braid_project(braid)), braid)


def test_pure_and_cyclic():
    assert is_pure(Braid(3, (1, 1)))
    assert not is_pure(Braid(3, (1,)))
    assert is_cyclic(Braid(3, (1, 2)))
    assert not is_cyclic(Braid(3, (1,)))


@pytest.mark.parametrize(
    "family, n, expected",
    [(F, 4, 1), (T, 4, 4), (V, 4, 24), (BV, 1, 1), (BV, 3, UNBOUNDED)],
)
def test_unit_group_order(family, n, expected):
    assert unit_group_order(family, n) == expected


@given(braids())
@PROPERTY_SETTINGS
def test_canonical_word_depends_only_on_the_braid(braid):
    """Test that a braid and its canonical word agree and that equal braids share the word"""
    canonical = braid_canonical(braid)
    assert braid_eq(canonical, braid)
    assert braid_canonical(canonical).word == canonical.word
    padded = Braid(braid.n, (1, -1) + braid.word)
    assert braid_canonical(padded).word == canonical.word


def test_canonical_word_examples():
    assert braid_canonical(Braid(3, (2, 1, 2))).word == braid_delta(3).word
    assert braid_canonical(Braid(3, (-1, -2, -1))).word == braid_delta(3).inverse().word
    assert braid_canonical(Braid(4, (1, -1))).word == ()
