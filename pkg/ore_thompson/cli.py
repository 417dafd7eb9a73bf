#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""Cli module contains entry points to the tool.

Each command provides a way to run group arithmetic, build complexes or run
the verification suites, and writes a JSON report.

For example, `ore verify ip-axioms --family V --bound 4` checks the indirect
product axioms of Thompson's V exhaustively up to degree 4.

Exit codes: 0 when the operation succeeded and every check passed, 1 when a
check failed, 2 for usage and input format errors.
"""

import os
import sys
from argparse import ArgumentParser

from .braid_command import ACTIONS as BRAID_ACTIONS
from .braid_command import BraidCommand
from .codec import MalformedInputError
from .complex_command import ACTIONS as COMPLEX_ACTIONS
from .complex_command import ComplexCommand
from .complexes import BoundExceededError
from .configuration import ConfigurationInvalidException, ConfigurationParsingException
from .constant import FAMILIES
from .forest_cat import CaretIndexError, ForestMismatchError, IdentityHeadError, NotAFactorError
from .forest_command import ACTIONS as FOREST_ACTIONS
from .forest_command import ForestCommand
from .fraction_groups import FamilyMismatchError
from .graph_rewrite import AncestorClosureError, GraphMismatchError, MissingEdgeError
from .group_command import ACTIONS as GROUP_ACTIONS
from .group_command import GroupCommand
from .grounded_command import GroundedCommand
from .homology_command import HomologyCommand
from .rewrite_command import ACTIONS as REWRITE_ACTIONS
from .rewrite_command import RewriteCommand
from .unit_groupoids import DegreeMismatchError
from .utils import SizeBudgetExceededError
from .verification import SUITES
from .verify_command import ALL_SUITES, VerifyCommand
from .zs_product import BoundaryMismatchError, FamilyViolationError

CMD_GROUP = "group"
CMD_FOREST = "forest"
CMD_BRAID = "braid"
CMD_COMPLEX = "complex"
CMD_HOMOLOGY = "homology"
CMD_GROUNDED = "grounded"
CMD_VERIFY = "verify"
CMD_REWRITE = "rewrite"

EXIT_USAGE = 2

commands = {
    CMD_GROUP: GroupCommand,
    CMD_FOREST: ForestCommand,
    CMD_BRAID: BraidCommand,
    CMD_COMPLEX: ComplexCommand,
    CMD_HOMOLOGY: HomologyCommand,
    CMD_GROUNDED: GroundedCommand,
    CMD_VERIFY: VerifyCommand,
    CMD_REWRITE: RewriteCommand,
}

actions = {
    CMD_GROUP: GROUP_ACTIONS,
    CMD_FOREST: FOREST_ACTIONS,
    CMD_BRAID: BRAID_ACTIONS,
    CMD_COMPLEX: COMPLEX_ACTIONS,
    CMD_REWRITE: REWRITE_ACTIONS,
}

# Errors that mean the input did not fit the operation
USAGE_ERRORS = (
    MalformedInputError,
    FileNotFoundError,
    ConfigurationInvalidException,
    ConfigurationParsingException,
    SizeBudgetExceededError,
    BoundExceededError,
    ForestMismatchError,
    CaretIndexError,
    NotAFactorError,
    IdentityHeadError,
    DegreeMismatchError,
    FamilyMismatchError,
    FamilyViolationError,
    BoundaryMismatchError,
    MissingEdgeError,
    AncestorClosureError,
    GraphMismatchError,
    ValueError,
)


def _common_options():
    """Options shared by every subcommand"""
    parser = ArgumentParser(add_help=False)
    parser.add_argument("--family", type=str, choices=FAMILIES, help="group family")
    parser.add_argument("--n", type=int, metavar="N", help="object size: leaves, strands or vertices")
    parser.add_argument("--bound", type=int, metavar="BOUND", help="enumeration bound overriding the configuration")
    parser.add_argument("--arity", type=int, metavar="D", help="caret arity of the forests (default 2)")
    parser.add_argument("--base", type=int, metavar="R", help="number of roots at the basepoint")
    parser.add_argument("--seed", type=int, metavar="SEED", help="seed of the randomized checks")
    parser.add_argument(
        "--in",
        dest="inputs",
        nargs="+",
        metavar="INPUT",
        help="inputs: .json files, inline JSON or text forms",
    )
    parser.add_argument("--out", type=str, metavar="REPORT_PATH", help="write the report here instead of stdout")
    parser.add_argument("--max-dim", type=int, metavar="K", help="highest homology dimension")
    parser.add_argument("--rule", type=str, metavar="RULE", help="edge replacement rule: basilica, L2 or D2")
    parser.add_argument("--graph", type=str, metavar="GRAPH", help="graph kind L|C|K, graph JSON or shipped graph")
    parser.add_argument("--edge", type=str, metavar="EDGE", help="edge address, for example a or a.2")
    return parser


def _parser():
    """Get a configured parser for the module.
    This method will initialize argument parser with a list
    of avaliable commands and their options."""
    parser = ArgumentParser(prog="ore")
    parser.add_argument(
        "-c",
        "--config-file",
        type=str,
        metavar="CONFIGURATION_FILE_PATH",
        help="path to the configuration file",
    )
    subparsers = parser.add_subparsers(dest="cmd")
    subparsers.required = True
    common = _common_options()
    for command, choices in actions.items():
        subparser = subparsers.add_parser(command, parents=[common])
        subparser.add_argument("action", choices=choices)
    subparsers.add_parser(CMD_HOMOLOGY, parents=[common])
    subparsers.add_parser(CMD_GROUNDED, parents=[common])
    verify = subparsers.add_parser(CMD_VERIFY, parents=[common])
    verify.add_argument("suite", choices=sorted(SUITES) + [ALL_SUITES])
    return parser


def main(args=None):
    """Entry point for the tool."""
    if args is None:
        parser = _parser()
        args = parser.parse_args()

    if not args.config_file:
        args.config_file = os.path.join(os.path.expanduser("~"), ".local", "config", "ore.yml")

    return run(args)


def run(args):
    """Run the command from the parsed args.

    This method takes already parsed and validated arguments
    and attempts to run the command with specified arguments."""
    try:
        return commands[args.cmd](args).execute()
    except USAGE_ERRORS as exception:
        print(f"ore {args.cmd}: {exception}", file=sys.stderr)
        return EXIT_USAGE
