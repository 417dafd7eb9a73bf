#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module exposes braid arithmetic: Garside normal forms, equality,
products, inverses and the projection to the symmetric groups.
"""
from .base_command import BaseCommand
from .codec import decode_braid, decode_permutation
from .unit_groupoids import (
    braid_eq,
    braid_inverse,
    braid_lift,
    braid_multiply,
    braid_normal_form,
    braid_project,
    is_cyclic,
    is_pure,
)

ACTIONS = ("normal-form", "eq", "mul", "inv", "project", "lift", "pure", "cyclic")


class BraidCommand(BaseCommand):
    """Runs one braid operation and reports its result"""

    def braids(self, count):
        return [decode_braid(document) for document in self.require_inputs(count)[:count]]

    def execute(self):
        action = self.args.action
        report = self.new_report()
        if action == "normal-form":
            (braid,) = self.braids(1)
            report.set_result(braid_normal_form(braid))
        elif action == "eq":
            first, second = self.braids(2)
            report.set_result({"equal": braid_eq(first, second)})
        elif action == "mul":
            first, second = self.braids(2)
            product = braid_multiply(first, second)
            report.set_result({"braid": product, "normal_form": braid_normal_form(product)})
        elif action == "inv":
            (braid,) = self.braids(1)
            inverse = braid_inverse(braid)
            report.set_result({"braid": inverse, "normal_form": braid_normal_form(inverse)})
        elif action == "project":
            (braid,) = self.braids(1)
            report.set_result(braid_project(braid))
        elif action == "lift":
            permutation = decode_permutation(self.require_inputs(1)[0])
            report.set_result(braid_lift(permutation))
        elif action == "pure":
            (braid,) = self.braids(1)
            report.set_result({"pure": is_pure(braid)})
        elif action == "cyclic":
            (braid,) = self.braids(1)
            report.set_result({"cyclic": is_cyclic(braid)})
        return self.write_report(report)
