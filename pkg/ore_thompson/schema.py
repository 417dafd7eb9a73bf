#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""schema module contains the configuration file schema.
"""
from .constant import DEFAULT_SEED, DEFAULT_SIZE_BUDGET

LOG_LEVELS = ["DEBUG", "INFO", "WARN", "WARNING", "ERROR", "CRITICAL"]
LOG_FORMATS = ["plain", "ecs"]


def _positive_integer(default):
    return {
        "required": False,
        "type": "integer",
        "min": 1,
        "default": default,
    }


schema = {
    "log_level": {
        "required": False,
        "type": "string",
        "default": "INFO",
        "allowed": LOG_LEVELS,
        "coerce": lambda value: str(value).upper(),
    },
    "log_format": {
        "required": False,
        "type": "string",
        "default": "plain",
        "allowed": LOG_FORMATS,
    },
    "seed": {
        "required": False,
        "type": "integer",
        "min": 0,
        "default": DEFAULT_SEED,
    },
    "size_budget": _positive_integer(DEFAULT_SIZE_BUDGET),
    "thread_count": _positive_integer(4),
    "debug_certificates": {
        "required": False,
        "type": "boolean",
        "default": False,
    },
    "bounds.ip_axioms": _positive_integer(5),
    "bounds.e_complex": _positive_integer(9),
    "bounds.descending_link": _positive_integer(7),
    "bounds.sublevel": _positive_integer(6),
    "bounds.graph_edges": _positive_integer(40),
    "samples.group_laws": _positive_integer(1000),
    "samples.pi_equivariance": _positive_integer(500),
    "samples.normal_form": _positive_integer(10000),
}
