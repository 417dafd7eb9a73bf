#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module reports the grounded connectivity certificate of a complex and
checks it against the homology when --max-dim is given.
"""
from .complex_command import ComplexCommand
from .complexes import connectivity_report, grounded_certificate, is_flag


class GroundedCommand(ComplexCommand):
    def execute(self):
        report = self.new_report()
        complex_ = self.resolve_complex()
        certificate = grounded_certificate(complex_)
        report.set_result({"flag": bool(complex_.vertices) and is_flag(complex_), **certificate.to_json()})
        if self.args.max_dim is not None:
            budget = self.config.get_value("size_budget")
            summary = connectivity_report(complex_, self.args.max_dim, budget, self.logger)
            report.add(
                "grounded-consistent",
                {"max_dim": self.args.max_dim, "f_vector": summary["f_vector"]},
                {"at_most": summary["connectivity"]},
                summary["grounded"]["bound"],
                summary["consistent"],
            )
        return self.write_report(report)
