#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module contains un-categorized utility methods.
"""
import json
import os
import random

from .constant import DEFAULT_SIZE_BUDGET, SIZE_BUDGET_ENV


class SizeBudgetExceededError(Exception):
    """Exception raised when an enumeration or a matrix grows beyond the size budget.

    Attributes:
        what -- description of the object being built
        size -- size that was requested
        budget -- budget in force
    """

    def __init__(self, what, size, budget):
        super().__init__(
            f"Size budget exceeded while building {what}: {size} > {budget}. "
            f"Raise size_budget in the configuration or set {SIZE_BUDGET_ENV}."
        )
        self.what = what
        self.size = size
        self.budget = budget


def get_size_budget(default=None):
    """Returns the size budget in force. The environment variable wins over the
    configured value, which wins over the built-in default.
    :param default: configured budget, if any
    """
    value = os.environ.get(SIZE_BUDGET_ENV)
    if value:
        try:
            budget = int(value)
            if budget > 0:
                return budget
        except ValueError:
            pass
    return default if default else DEFAULT_SIZE_BUDGET


def check_budget(what, size, budget=None):
    """Raises SizeBudgetExceededError when size is over the budget
    :param what: description used in the error message
    :param size: requested size
    :param budget: explicit budget, falls back to get_size_budget()
    """
    budget = get_size_budget(budget)
    if size > budget:
        raise SizeBudgetExceededError(what, size, budget)


def seeded_random(seed):
    """Returns an isolated random generator for reproducible suites"""
    return random.Random(seed)


def canonical_json(value):
    """Serializes a value into its canonical (sorted, compact) JSON text.
    The text doubles as a stable sort key for report instances.
    """
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def compositions(total, parts):
    """Yields all sequences over `parts` summing to `total`, in lexicographic order.
    :param total: the sum to reach
    :param parts: sorted allowed part sizes
    """
    if total == 0:
        yield ()
        return
    for part in parts:
        if part <= total:
            for rest in compositions(total - part, parts):
                yield (part,) + rest
