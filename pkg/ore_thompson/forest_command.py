#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module exposes the forest category: composition, normal forms, the
lattice operations and the Garside structure.
"""
from .base_command import BaseCommand
from .codec import decode_forest
from .forest_cat import (
    compose,
    component_reachable,
    delta,
    enumerate_elementary,
    garside_factorization,
    garside_head,
    gcd,
    is_elementary,
    lcm,
    left_quotient,
    right_quotient,
)

ACTIONS = ("compose", "normal-form", "lcm", "gcd", "quotient", "delta", "head", "factorize", "elementary", "reachable")


class ForestCommand(BaseCommand):
    """Runs one forest operation and reports its result"""

    def forests(self, count):
        return [decode_forest(document) for document in self.require_inputs(count)[:count]]

    def execute(self):
        action = self.args.action
        report = self.new_report()
        arity = self.args.arity or 2
        if action == "compose":
            f, g = self.forests(2)
            report.set_result(compose(f, g).to_text())
        elif action == "normal-form":
            (f,) = self.forests(1)
            report.set_result({"forest": f.to_json(), "text": f.to_text()})
        elif action == "lcm":
            f, g = self.forests(2)
            report.set_result(lcm(f, g).to_text())
        elif action == "gcd":
            f, g = self.forests(2)
            report.set_result(gcd(f, g).to_text())
        elif action == "quotient":
            a, f = self.forests(2)
            if a.roots == f.roots:
                report.set_result({"left": left_quotient(a, f).to_text()})
            else:
                report.set_result({"right": right_quotient(a, f).to_text()})
        elif action == "delta":
            (f,) = self.forests(1)
            report.set_result({"delta": delta(f)})
        elif action == "head":
            (f,) = self.forests(1)
            report.set_result(garside_head(f).to_text())
        elif action == "factorize":
            (f,) = self.forests(1)
            report.set_result([factor.to_text() for factor in garside_factorization(f)])
        elif action == "elementary":
            if getattr(self.args, "inputs", None):
                (f,) = self.forests(1)
                report.set_result({"elementary": is_elementary(f)})
            else:
                forests = enumerate_elementary(self.require_option("n"), arity)
                report.set_result([forest.to_text() for forest in forests])
        elif action == "reachable":
            m, n = self.args.base or 1, self.require_option("n")
            report.set_result({"m": m, "n": n, "arity": arity, "reachable": component_reachable(m, n, arity)})
        return self.write_report(report)
