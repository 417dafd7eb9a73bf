#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""homology module computes exact integer reduced homology of finite complexes.

    Boundary matrices of the augmented chain complex are kept sparse. Unit
    pivots are eliminated first, starting with the shortest rows (a row with a
    single entry is a free face and costs nothing); whatever is left goes to
    SymPy's invariant factors over ZZ.
"""
import heapq
import itertools
import logging

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors
from sympy.polys.domains import ZZ

from .utils import check_budget


def boundary_columns(complex_, k):
    """Returns the boundary of every k-simplex as a dict {row index: coefficient}.

    Rows index the (k-1)-simplices in sorted order; for k = 0 the single row is
    the empty simplex of the augmentation.
    """
    simplices = complex_.simplices(k)
    if k == 0:
        return [{0: 1} for _ in simplices]
    rows = {face: position for position, face in enumerate(complex_.simplices(k - 1))}
    columns = []
    for simplex in simplices:
        column = {}
        for position in range(len(simplex)):
            face = simplex[:position] + simplex[position + 1:]
            column[rows[face]] = -1 if position % 2 else 1
        columns.append(column)
    return columns


class _SparseMatrix:
    """Column-major integer matrix with a row index, for in-place elimination"""

    def __init__(self, columns):
        self.columns = {index: dict(column) for index, column in enumerate(columns) if column}
        self.rows = {}
        for index, column in self.columns.items():
            for row in column:
                self.rows.setdefault(row, set()).add(index)

    def eliminate(self, row, column):
        """Clears `row` with column operations against the unit pivot at (row, column),
        then drops the pivot row and column"""
        pivot = self.columns[column]
        unit = pivot[row]
        for other in sorted(self.rows[row] - {column}):
            target = self.columns[other]
            factor = target[row] * unit
            for entry_row, value in pivot.items():
                updated = target.get(entry_row, 0) - factor * value
                if updated:
                    if entry_row not in target:
                        self.rows.setdefault(entry_row, set()).add(other)
                    target[entry_row] = updated
                else:
                    target.pop(entry_row, None)
                    self.rows[entry_row].discard(other)
            if not target:
                del self.columns[other]
        for entry_row in pivot:
            self.rows[entry_row].discard(column)
        del self.columns[column]
        for entry_row in list(pivot):
            if not self.rows.get(entry_row):
                self.rows.pop(entry_row, None)
        return pivot.keys()

    def unit_pivot(self, row):
        """The unit entry of `row` in the shortest column, or None"""
        candidates = [
            (len(self.columns[column]), column)
            for column in self.rows.get(row, ())
            if abs(self.columns[column][row]) == 1
        ]
        return min(candidates)[1] if candidates else None


def matrix_rank_and_torsion(columns, budget=None, logger=None):
    """Rank and torsion coefficients of an integer matrix given by sparse columns.
    :param columns: list of dicts {row: value}
    :param budget: size budget for the dense leftover block
    :returns: (rank, sorted list of invariant factors greater than 1)
    """
    logger = logger or logging.getLogger(__name__)
    matrix = _SparseMatrix(columns)
    rank = 0
    queue = [(len(columns_of_row), row) for row, columns_of_row in matrix.rows.items()]
    heapq.heapify(queue)
    while queue:
        length, row = heapq.heappop(queue)
        current = matrix.rows.get(row)
        if not current or len(current) != length:
            continue
        column = matrix.unit_pivot(row)
        if column is None:
            continue
        touched = matrix.eliminate(row, column)
        rank += 1
        for other_row in touched:
            if other_row in matrix.rows:
                heapq.heappush(queue, (len(matrix.rows[other_row]), other_row))
    leftover_rows = sorted(matrix.rows)
    leftover_columns = sorted(matrix.columns)
    if not leftover_columns:
        return rank, []
    check_budget("dense boundary block", len(leftover_rows) * len(leftover_columns), budget)
    logger.debug(f"Smith normal form on a {len(leftover_rows)}x{len(leftover_columns)} leftover block")
    row_index = {row: position for position, row in enumerate(leftover_rows)}
    dense = [[0] * len(leftover_columns) for _ in leftover_rows]
    for position, column in enumerate(leftover_columns):
        for row, value in matrix.columns[column].items():
            dense[row_index[row]][position] = value
    factors = [abs(int(factor)) for factor in invariant_factors(Matrix(dense), domain=ZZ)]
    nonzero = [factor for factor in factors if factor]
    return rank + len(nonzero), sorted(factor for factor in nonzero if factor > 1)


def reduced_homology(complex_, max_dim, budget=None, logger=None):
    """Reduced integer homology in dimensions -1..max_dim.
    :param complex_: SimplicialComplex
    :param max_dim: highest dimension to compute
    :returns: dict dimension -> {"betti": int, "torsion": [int, ...]}
    """
    logger = logger or logging.getLogger(__name__)
    counts = {-1: 1}
    for k in range(max_dim + 2):
        counts[k] = len(complex_.simplices(k))
        check_budget(f"{k}-simplices", counts[k], budget)
    ranks = {}
    torsion = {}
    for k in range(max_dim + 2):
        if counts[k] == 0:
            ranks[k], torsion[k] = 0, []
            continue
        logger.debug(f"Reducing the boundary of {counts[k]} {k}-simplices")
        ranks[k], torsion[k] = matrix_rank_and_torsion(boundary_columns(complex_, k), budget, logger)
    ranks[-1] = 0
    result = {}
    for k in range(-1, max_dim + 1):
        result[k] = {"betti": counts[k] - ranks[k] - ranks[k + 1], "torsion": torsion[k + 1]}
    return result


def is_acyclic(homology, dimension):
    group = homology[dimension]
    return group["betti"] == 0 and not group["torsion"]


def connectivity_from_homology(homology, max_dim):
    """Largest c <= max_dim with reduced homology vanishing in dimensions -1..c, -1 otherwise"""
    connectivity = -1
    for dimension in itertools.takewhile(lambda item: is_acyclic(homology, item), range(max_dim + 1)):
        connectivity = dimension
    return connectivity


def homological_connectivity(complex_, max_dim, budget=None, logger=None):
    """Largest c <= max_dim with reduced homology vanishing through c.

    Returns -2 for the empty complex and -1 for a disconnected one.
    """
    if not complex_.vertices:
        return -2
    return connectivity_from_homology(reduced_homology(complex_, max_dim, budget, logger), max_dim)
