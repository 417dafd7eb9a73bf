#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module runs edge replacement rules on graphs.

    --graph takes a graph JSON file or one of the shipped graphs: single_edge,
    basilica, badgraph1, badgraph2, badgraph3.
"""
import re

from .base_command import BaseCommand
from .codec import MalformedInputError, decode_graph, read_document
from .constant import RULE_BASILICA
from .graph_rewrite import (
    apply_rule,
    bad_graph,
    basilica_graph,
    build_E_graph,
    find_coexpansions,
    get_rule,
    height_graph,
    parse_address,
    single_edge_graph,
)
from .homology import connectivity_from_homology, reduced_homology

ACTIONS = ("apply", "eh", "coexpansions", "height")
BAD_GRAPH_NAME = re.compile(r"^badgraph(\d+)$")
SHIPPED_GRAPHS = {"single_edge": single_edge_graph, "basilica": basilica_graph}


def load_graph(name):
    """Reads a graph JSON file or builds a shipped graph by name"""
    if name.endswith(".json"):
        return decode_graph(read_document(name))
    if name in SHIPPED_GRAPHS:
        return SHIPPED_GRAPHS[name]()
    match = BAD_GRAPH_NAME.match(name)
    if match and int(match.group(1)) >= 1:
        return bad_graph(int(match.group(1)))
    raise MalformedInputError(name, "expected a .json file, single_edge, basilica or badgraph<k>")


class RewriteCommand(BaseCommand):
    """Applies a rule, lists co-expansions or builds E(H) for one graph"""

    def execute(self):
        action = self.args.action
        report = self.new_report()
        try:
            rule = get_rule(self.args.rule or RULE_BASILICA)
        except ValueError as exception:
            raise MalformedInputError(self.args.rule, str(exception))
        graph = load_graph(self.require_option("graph"))
        bound = self.config.get_value("bounds.graph_edges")
        if action == "apply":
            edge = parse_address(self.require_option("edge"))
            report.set_result(apply_rule(graph, edge, rule))
        elif action == "coexpansions":
            patterns = find_coexpansions(graph, rule, bound, self.logger)
            report.set_result([pattern.label() for pattern in patterns])
        elif action == "height":
            report.set_result({"height": height_graph(graph)})
        elif action == "eh":
            complex_ = build_E_graph(graph, rule, bound, self.logger)
            max_dim = 1 if self.args.max_dim is None else self.args.max_dim
            homology = reduced_homology(complex_, max_dim, self.config.get_value("size_budget"), self.logger)
            report.set_result(
                {
                    "complex": complex_.to_json(),
                    "f_vector": complex_.f_vector(),
                    "homology": {str(k): value for k, value in sorted(homology.items())},
                    "betti": {str(k): value["betti"] for k, value in sorted(homology.items())},
                    "connectivity": connectivity_from_homology(homology, max_dim),
                }
            )
        return self.write_report(report)
