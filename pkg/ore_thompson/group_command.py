#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module allows to run arithmetic in the groups of fractions.

    Elements are read from --in, either as JSON documents (files ending in
    .json or inline) or in the text form V[num | unit | den].
"""
from .base_command import BaseCommand
from .codec import decode_element, decode_forest
from .fraction_groups import CertificateFailedError, eq, expand, inv, mul, order, project_to_v, reduce

DEFAULT_ORDER_BOUND = 64

ACTIONS = ("mul", "inv", "eq", "order", "reduce", "expand", "project")


def describe(element):
    return {"element": element.to_json(), "text": str(element)}


class GroupCommand(BaseCommand):
    """Runs one group operation and reports its result"""

    def elements(self, count):
        family = getattr(self.args, "family", None)
        return [decode_element(document, family) for document in self.require_inputs(count)[:count]]

    def execute(self):
        action = self.args.action
        report = self.new_report()
        certify = self.config.get_value("debug_certificates")
        self.logger.debug(f"Running group {action}")
        if action == "mul":
            x, y = self.elements(2)
            try:
                report.set_result(describe(mul(x, y, certify)))
            except CertificateFailedError as exception:
                report.add("certificate", {"x": str(x), "y": str(y)}, "(x * y) * y^-1 = x", str(exception), False)
        elif action == "inv":
            (x,) = self.elements(1)
            report.set_result(describe(inv(x)))
        elif action == "eq":
            x, y = self.elements(2)
            report.set_result({"equal": eq(x, y)})
        elif action == "order":
            (x,) = self.elements(1)
            bound = self.args.bound or DEFAULT_ORDER_BOUND
            report.set_result({"order": order(x, bound), "bound": bound})
        elif action == "reduce":
            (x,) = self.elements(1)
            report.set_result(describe(reduce(x)))
        elif action == "expand":
            document, forest = self.require_inputs(2)[:2]
            x = decode_element(document, getattr(self.args, "family", None))
            report.set_result(describe(expand(x, decode_forest(forest))))
        elif action == "project":
            (x,) = self.elements(1)
            report.set_result(describe(project_to_v(x)))
        return self.write_report(report)
