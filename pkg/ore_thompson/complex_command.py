#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module builds the simplicial complexes: E(n) of the forest families,
matching complexes, the map E_V(n) -> M(K_n), descending links and positive
sublevel complexes. The homology and grounded commands share its complex
resolution.
"""
from .base_command import BaseCommand
from .codec import MalformedInputError, decode_complex, decode_forest
from .complexes import (
    build_E,
    descending_link,
    e_to_matching_map,
    graph_by_kind,
    matching_complex,
    positive_sublevel_complex,
)
from .constant import GRAPH_KINDS, V

ACTIONS = ("E", "matching", "e-map", "descending-link", "sublevel")


def describe(complex_):
    return {"complex": complex_.to_json(), "dimension": complex_.dimension, "f_vector": complex_.f_vector()}


class ComplexCommand(BaseCommand):
    """Builds one complex and reports it"""

    def build_E(self, family):
        bound = self.config.get_value("bounds.e_complex")
        return build_E(family, self.require_option("n"), self.args.arity or 2, bound=bound, logger=self.logger)

    def matching(self):
        kind = self.require_option("graph")
        if kind not in GRAPH_KINDS:
            raise MalformedInputError(kind, f"expected a graph kind among {', '.join(GRAPH_KINDS)}")
        return matching_complex(graph_by_kind(kind, self.require_option("n")))

    def resolve_complex(self):
        """The complex a homology or grounded command works on: --in complex.json,
        a matching complex (--graph L|C|K --n) or E(n) (--family --n)"""
        if getattr(self.args, "inputs", None):
            return decode_complex(self.require_inputs(1)[0])
        if getattr(self.args, "graph", None):
            return self.matching()
        if getattr(self.args, "family", None):
            return self.build_E(self.args.family)[1]
        raise MalformedInputError(None, "give a complex with --in, --graph and --n, or --family and --n")

    def execute(self):
        action = self.args.action
        report = self.new_report()
        if action == "E":
            poset, complex_ = self.build_E(self.args.family or V)
            report.set_result(dict(describe(complex_), classes=len(poset.elements)))
        elif action == "matching":
            report.set_result(describe(self.matching()))
        elif action == "e-map":
            n = self.require_option("n")
            _, complex_ = self.build_E(V)
            summary = e_to_matching_map(complex_, n)
            report.add("e-map-simplicial", {"n": n}, True, summary["simplicial"], summary["simplicial"])
            report.add("e-map-surjective", {"n": n}, True, summary["surjective"], summary["surjective"])
            for fiber in summary["fibers"]:
                report.add("e-map-fiber", {"n": n, "simplex": fiber["simplex"]}, fiber["expected"], fiber["facets"],
                           fiber["pass"])
        elif action == "descending-link":
            tree = decode_forest(self.require_inputs(1)[0])
            bound = self.config.get_value("bounds.descending_link")
            report.set_result(describe(descending_link(tree, bound, self.logger)))
        elif action == "sublevel":
            bound = self.config.get_value("bounds.sublevel")
            report.set_result(describe(positive_sublevel_complex(self.require_option("n"), self.args.arity or 2,
                                                                 bound, self.logger)))
        return self.write_report(report)
