#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#
"""Configuration module allows manipulations with application configuration.

    This module can be used to read and validate the configuration file that
    defines seeds, bounds, sample counts and the size budget of the checks.
"""
import os

import yaml
from cerberus import Validator
from yaml.error import YAMLError

from .schema import schema
from .utils import get_size_budget


class ConfigurationInvalidException(Exception):
    """Exception raised when configuration was invalid.

    Attributes:
        errors - errors found in the configuration
    """

    def __init__(self, errors):
        super().__init__(f"Provided configuration was invalid. Errors: {errors}.")

        self.errors = errors


class ConfigurationParsingException(Exception):
    """Exception raised when configuration could not be parsed.

    Attributes:
        file_name - name of the file that could not be parsed
    """

    def __init__(self, file_name, inner_exception):
        super().__init__(f"Failed to parse configuration file {file_name}.")

        self.file_name = file_name
        self.inner_exception = inner_exception


class Configuration:
    """Configuration class is responsible for parsing, validating and accessing
    configuration options from the configuration file.

    A missing file yields the schema defaults; ORE_SIZE_BUDGET overrides size_budget.
    """

    def __init__(self, file_name=None):
        self.__configurations = {}
        self.file_name = file_name
        if file_name and os.path.exists(file_name):
            try:
                with open(file_name, encoding="utf-8") as stream:
                    self.__configurations = yaml.safe_load(stream) or {}
            except YAMLError as exception:
                raise ConfigurationParsingException(file_name, exception)
        if not isinstance(self.__configurations, dict):
            raise ConfigurationInvalidException({"document": ["must be a mapping of keys to values"]})
        self.__configurations = self.validate()
        self.__configurations["size_budget"] = get_size_budget(self.__configurations["size_budget"])

    def validate(self):
        """Validates each properties defined in the yaml configuration file"""
        validator = Validator(schema)
        validator.validate(self.__configurations, schema)
        if validator.errors:
            raise ConfigurationInvalidException(validator.errors)
        return validator.document

    def get_value(self, key):
        """Returns a configuration value that matches the key argument"""

        return self.__configurations.get(key)
