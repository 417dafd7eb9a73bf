#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
import logging
import os
import sys
from argparse import Namespace

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from ore_thompson.configuration import Configuration  # noqa

CONFIG_FILE = os.path.join(
    os.path.join(os.path.dirname(__file__), "config"),
    "ore.yml",
)

DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "data"))

OPTIONS = (
    "action",
    "suite",
    "family",
    "n",
    "bound",
    "arity",
    "base",
    "seed",
    "inputs",
    "out",
    "max_dim",
    "rule",
    "graph",
    "edge",
)


def get_args(command_name, **options):
    """generate args for testing cli file
    :param command_name: name of the command to execute.
    :param options: values of the command line options, the others are None
    """
    args = Namespace(**{option: None for option in OPTIONS})
    args.cmd = command_name
    args.config_file = CONFIG_FILE
    for key, value in options.items():
        setattr(args, key, value)
    return args


def settings(name="unit_test"):
    """Loads the test configuration and returns it along with a logger"""
    configuration = Configuration(file_name=CONFIG_FILE)
    logger = logging.getLogger(name)
    return configuration, logger
