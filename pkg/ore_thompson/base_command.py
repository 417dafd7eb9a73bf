#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""Module contains a base command interface.

The tool runs multiple commands such as group, forest, complex, verify,
etc. This module provides convenience interface defining the shared
objects and methods that can be used by commands."""
import logging

try:
    from functools import cached_property
except ImportError:
    from cached_property import cached_property

from concurrent.futures import ThreadPoolExecutor, as_completed

import ecs_logging

from .codec import MalformedInputError, parse_document, read_document
from .configuration import Configuration
from .report import Report


class BaseCommand:
    """Base interface for all module commands.
    Inherit from it and implement 'execute' method, then add
    code to cli.py to register this command."""

    def __init__(self, args):
        self.args = args

    def execute(self):
        """Run the command.
        This method is overridden by actual commands with logic
        that is specific to each command implementing it.
        It returns the process exit code."""
        raise NotImplementedError

    @cached_property
    def logger(self):
        """Get the logger instance for the running command.
        log level will be determined by the configuration
        setting log_level, the format by log_format.
        """
        log_level = self.config.get_value("log_level")
        logger = logging.getLogger(__name__)
        logger.propagate = True
        logger.setLevel(log_level)

        if not logger.handlers:
            handler = logging.StreamHandler()
            if self.config.get_value("log_format") == "ecs":
                handler.setFormatter(ecs_logging.StdlibFormatter())
            handler.setLevel(log_level)
            logger.addHandler(handler)

        return logger

    @cached_property
    def config(self):
        """Get the configuration for the running command."""
        file_name = getattr(self.args, "config_file", None)
        return Configuration(file_name)

    @cached_property
    def seed(self):
        """The --seed flag when given, the configured seed otherwise"""
        seed = getattr(self.args, "seed", None)
        return self.config.get_value("seed") if seed is None else seed

    @property
    def command_line(self):
        """Echo of the command for the report header"""
        parts = [getattr(self.args, "cmd", "")]
        for name in ("action", "suite"):
            value = getattr(self.args, name, None)
            if value:
                parts.append(value)
        return " ".join(parts)

    def new_report(self):
        return Report(self.command_line, self.seed)

    def write_report(self, report):
        """Writes the report to --out (stdout by default) and returns the exit code"""
        report.write(getattr(self.args, "out", None))
        return report.exit_code

    def load_inputs(self):
        """Decodes every --in argument: names ending in .json are read as files,
        anything else is taken as an inline JSON document or text form"""
        documents = []
        for item in getattr(self.args, "inputs", None) or []:
            if item.endswith(".json"):
                documents.append(read_document(item))
            else:
                documents.append(parse_document(item))
        return documents

    def require_inputs(self, count):
        documents = self.load_inputs()
        if len(documents) < count:
            raise MalformedInputError(
                getattr(self.args, "inputs", None), f"expected {count} inputs after --in, got {len(documents)}"
            )
        return documents

    def create_and_execute_jobs(self, thread_count, func, args, iterable_list):
        """Apply async calls using multithreading to the targeted function
        :param thread_count: Total number of threads to be spawned
        :param func: The target function on which the async calls would be made
        :param args: Arguments for the targeted function
        :param iterable_list: list to iterate over and create thread
        :returns: the concatenated records; a job that raised contributes one failing record
        """
        records = []
        with ThreadPoolExecutor(max_workers=thread_count) as executor:
            future_to_item = {
                executor.submit(func, *args, list_element): list_element for list_element in iterable_list
            }
            for future in as_completed(future_to_item):
                item = future_to_item[future]
                try:
                    records.extend(future.result())
                except Exception as exception:
                    self.logger.exception(f"Error while running {item}. Error {exception}")
                    records.append(
                        {
                            "name": str(item),
                            "instance": {"job": str(item)},
                            "expected": "completed",
                            "got": f"{type(exception).__name__}: {exception}",
                            "pass": False,
                        }
                    )
        return records

    def require_option(self, name):
        """Returns the value of a flag the current action cannot do without"""
        value = getattr(self.args, name, None)
        if value is None:
            raise MalformedInputError(f"--{name.replace('_', '-')}", "this action needs the option")
        return value
