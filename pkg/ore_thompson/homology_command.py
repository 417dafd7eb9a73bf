#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module allows to compute the reduced integer homology of a complex.
"""
from .complex_command import ComplexCommand
from .homology import connectivity_from_homology, reduced_homology

DEFAULT_MAX_DIM = 2


class HomologyCommand(ComplexCommand):
    """Reports reduced homology and homological connectivity up to --max-dim"""

    def execute(self):
        report = self.new_report()
        complex_ = self.resolve_complex()
        max_dim = DEFAULT_MAX_DIM if self.args.max_dim is None else self.args.max_dim
        budget = self.config.get_value("size_budget")
        if complex_.vertices:
            homology = reduced_homology(complex_, max_dim, budget, self.logger)
            connectivity = connectivity_from_homology(homology, max_dim)
        else:
            homology, connectivity = {}, -2
        report.set_result(
            {
                "f_vector": complex_.f_vector(),
                "max_dim": max_dim,
                "homology": {str(k): value for k, value in sorted(homology.items())},
                "connectivity": connectivity,
            }
        )
        return self.write_report(report)
