#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.complexes import (  # noqa
    SimplicialComplex,
    complete_graph,
    cyclic_graph,
    linear_graph,
    matching_complex,
)
from ore_thompson.homology import (  # noqa
    boundary_columns,
    connectivity_from_homology,
    homological_connectivity,
    matrix_rank_and_torsion,
    reduced_homology,
)
from ore_thompson.utils import SizeBudgetExceededError  # noqa

ZERO = {"betti": 0, "torsion": []}

HOLLOW_TRIANGLE = SimplicialComplex(range(3), [(0, 1), (1, 2), (0, 2)])
POINT = SimplicialComplex(["p"], [(0,)])


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv("ORE_SIZE_BUDGET", raising=False)


def betti_numbers(complex_, max_dim):
    homology = reduced_homology(complex_, max_dim)
    return [homology[k]["betti"] for k in range(-1, max_dim + 1)]


def test_boundary_signs():
    """Test the alternating signs of the boundary of a triangle"""
    triangle = SimplicialComplex(range(3), [(0, 1, 2)])
    assert boundary_columns(triangle, 2) == [{2: 1, 1: -1, 0: 1}]
    assert boundary_columns(triangle, 0) == [{0: 1}, {0: 1}, {0: 1}]


@pytest.mark.parametrize(
    "columns, rank, torsion",
    [
        ([{0: 1}, {0: 1}], 1, []),
        ([{0: 2}], 1, [2]),
        ([{0: 2}, {0: 4}], 1, [2]),
        ([{0: 1, 1: 1}, {0: 1, 1: -1}], 2, [2]),
        ([], 0, []),
    ],
)
def test_matrix_rank_and_torsion(columns, rank, torsion):
    assert matrix_rank_and_torsion(columns) == (rank, torsion)


@pytest.mark.parametrize(
    "complex_, max_dim, expected",
    [
        (POINT, 1, [0, 0, 0]),
        (HOLLOW_TRIANGLE, 1, [0, 0, 1]),
        (matching_complex(linear_graph(4)), 1, [0, 1, 0]),
        (matching_complex(linear_graph(5)), 1, [0, 0, 0]),
        (matching_complex(cyclic_graph(5)), 2, [0, 0, 1, 0]),
        (SimplicialComplex([], []), 0, [1, 0]),
    ],
)
def test_betti_numbers(complex_, max_dim, expected):
    assert betti_numbers(complex_, max_dim) == expected


def test_matching_complex_of_k7_has_three_torsion():
    """Test that H_1 of M(K_7) is Z/3"""
    homology = reduced_homology(matching_complex(complete_graph(7)), 1)
    assert homology[0] == ZERO
    assert homology[1] == {"betti": 0, "torsion": [3]}
    assert homological_connectivity(matching_complex(complete_graph(7)), 1) == 0


@pytest.mark.parametrize(
    "complex_, max_dim, expected",
    [
        (SimplicialComplex([], []), 2, -2),
        (matching_complex(linear_graph(4)), 1, -1),
        (HOLLOW_TRIANGLE, 2, 0),
        (POINT, 3, 3),
        (SimplicialComplex(range(4), [(0, 1, 2, 3)]), 2, 2),
    ],
)
def test_homological_connectivity(complex_, max_dim, expected):
    assert homological_connectivity(complex_, max_dim) == expected


def test_connectivity_from_homology():
    homology = {-1: ZERO, 0: ZERO, 1: {"betti": 1, "torsion": []}, 2: ZERO}
    assert connectivity_from_homology(homology, 2) == 0
    assert connectivity_from_homology({-1: ZERO, 0: {"betti": 0, "torsion": [2]}}, 0) == -1


def test_homology_respects_size_budget():
    with pytest.raises(SizeBudgetExceededError) as error:
        reduced_homology(matching_complex(complete_graph(7)), 1, budget=10)
    assert error.value.budget == 10


def test_environment_budget_wins(monkeypatch):
    monkeypatch.setenv("ORE_SIZE_BUDGET", "5")
    with pytest.raises(SizeBudgetExceededError):
        reduced_homology(matching_complex(complete_graph(5)), 1, budget=1000)
