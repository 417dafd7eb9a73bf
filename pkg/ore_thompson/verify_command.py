#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""This module allows to run the verification suites.

    A single suite, or all of them with `ore verify all`, is fanned out over
    the configured number of threads. The report is sorted, so it is the same
    for any thread count.
"""
from .base_command import BaseCommand
from .verification import SUITES, SuiteContext, run_suite

ALL_SUITES = "all"


class VerifyCommand(BaseCommand):
    """Runs verification suites and exits 1 when any check fails"""

    def suite_names(self):
        if self.args.suite == ALL_SUITES:
            return sorted(SUITES)
        return [self.args.suite]

    def execute(self):
        names = self.suite_names()
        thread_count = self.config.get_value("thread_count")
        context = SuiteContext.from_config(
            self.config,
            seed=self.seed,
            family=getattr(self.args, "family", None),
            bound=getattr(self.args, "bound", None),
            logger=self.logger,
        )
        self.logger.info(f"Running {len(names)} suite(s) on {thread_count} thread(s)")
        records = self.create_and_execute_jobs(thread_count, run_suite, (context,), names)
        report = self.new_report()
        report.extend(records)
        summary = report.summary()
        self.logger.info(f"{summary['passed']} of {summary['total']} checks passed")
        return self.write_report(report)
