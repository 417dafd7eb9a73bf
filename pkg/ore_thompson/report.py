#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""report module collects check records and writes them as deterministic JSON.

    Records are sorted by name and then by the canonical encoding of their
    instance, so a report does not depend on the order checks finished in.
"""
import json
import sys

from .codec import encode
from .constant import REPORT_SCHEMA_VERSION
from .utils import canonical_json


class Report:
    """Outcome of one command: an echo of the command, the seed, every record
    {name, instance, expected, got, pass} and a summary."""

    def __init__(self, command, seed=0):
        self.command = command
        self.seed = seed
        self.records = []
        self.result = None

    def add(self, name, instance, expected, got, passed):
        self.records.append(
            {
                "name": name,
                "instance": encode(instance),
                "expected": encode(expected),
                "got": encode(got),
                "pass": bool(passed),
            }
        )

    def extend(self, records):
        """Adds records produced by the checkers, which already use the record layout"""
        for record in records:
            self.add(record["name"], record["instance"], record["expected"], record["got"], record["pass"])

    def set_result(self, value):
        """Attaches the value computed by a non-check command"""
        self.result = encode(value)

    @property
    def passed(self):
        return all(record["pass"] for record in self.records)

    def summary(self):
        passed = sum(1 for record in self.records if record["pass"])
        return {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    def sorted_records(self):
        return sorted(self.records, key=lambda record: (record["name"], canonical_json(record["instance"])))

    def to_json(self):
        document = {
            "version": REPORT_SCHEMA_VERSION,
            "command": self.command,
            "seed": self.seed,
            "records": self.sorted_records(),
            "summary": self.summary(),
        }
        if self.result is not None:
            document["result"] = self.result
        return document

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def write(self, out=None):
        """Writes the report to the file `out`, or to stdout when out is None"""
        text = self.dumps() + "\n"
        if out:
            with open(out, "w", encoding="utf-8") as stream:
                stream.write(text)
        else:
            sys.stdout.write(text)

    @property
    def exit_code(self):
        return 0 if self.passed else 1
