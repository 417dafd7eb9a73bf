#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.constant import DEFAULT_SIZE_BUDGET, SIZE_BUDGET_ENV  # noqa
from ore_thompson.utils import (  # noqa
    SizeBudgetExceededError,
    canonical_json,
    check_budget,
    compositions,
    get_size_budget,
    seeded_random,
)


@pytest.mark.parametrize(
    "environment, configured, expected",
    [
        (None, None, DEFAULT_SIZE_BUDGET),
        (None, 500, 500),
        ("42", 500, 42),
        ("not a number", 500, 500),
        ("-3", None, DEFAULT_SIZE_BUDGET),
    ],
)
def test_get_size_budget(monkeypatch, environment, configured, expected):
    """Test that the environment wins over the configured budget when it is a positive integer"""
    if environment is None:
        monkeypatch.delenv(SIZE_BUDGET_ENV, raising=False)
    else:
        monkeypatch.setenv(SIZE_BUDGET_ENV, environment)
    assert get_size_budget(configured) == expected


def test_check_budget(monkeypatch):
    """Test that sizes over the budget raise SizeBudgetExceededError"""
    monkeypatch.delenv(SIZE_BUDGET_ENV, raising=False)
    check_budget("matrix", 10, 10)
    with pytest.raises(SizeBudgetExceededError) as error:
        check_budget("matrix", 11, 10)
    assert error.value.what == "matrix"
    assert error.value.size == 11
    assert SIZE_BUDGET_ENV in str(error.value)


def test_seeded_random_is_reproducible():
    """Test that two generators with one seed draw the same numbers"""
    first, second = seeded_random(5), seeded_random(5)
    assert [first.randint(0, 100) for _ in range(10)] == [second.randint(0, 100) for _ in range(10)]


def test_canonical_json():
    """Test that key order and spacing do not change the text"""
    assert canonical_json({"b": [1, 2], "a": None}) == '{"a":null,"b":[1,2]}'
    assert canonical_json({"a": None, "b": [1, 2]}) == canonical_json({"b": [1, 2], "a": None})


@pytest.mark.parametrize(
    "total, parts, expected",
    [
        (0, (1, 2), [()]),
        (3, (1, 2), [(1, 1, 1), (1, 2), (2, 1)]),
        (4, (1, 3), [(1, 1, 1, 1), (1, 3), (3, 1)]),
        (1, (2,), []),
    ],
)
def test_compositions(total, parts, expected):
    """Test that compositions are listed in lexicographic order"""
    assert list(compositions(total, parts)) == expected
