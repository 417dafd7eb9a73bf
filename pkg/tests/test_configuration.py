#
# Copyright Elasticsearch B.V. and/or licensed to Elasticsearch B.V. under one
# or more contributor license agreements. Licensed under the Elastic License 2.0;
# you may not use this file except in compliance with the Elastic License 2.0.
#

import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))
from ore_thompson.configuration import (  # noqa
    Configuration,
    ConfigurationInvalidException,
    ConfigurationParsingException,
)
from ore_thompson.constant import DEFAULT_SIZE_BUDGET, SIZE_BUDGET_ENV  # noqa
from support import CONFIG_FILE, settings  # noqa


@pytest.fixture(autouse=True)
def no_budget_override(monkeypatch):
    monkeypatch.delenv(SIZE_BUDGET_ENV, raising=False)


def write_config(tmp_path, text):
    path = tmp_path / "ore.yml"
    path.write_text(text)
    return str(path)


def test_test_configuration_loads():
    """Test that the configuration used by the unit tests is valid"""
    config, _ = settings()
    assert config.get_value("log_level") == "DEBUG"
    assert config.get_value("bounds.ip_axioms") == 4
    assert config.get_value("samples.normal_form") == 300
    assert config.get_value("debug_certificates") is True
    assert config.file_name == CONFIG_FILE


def test_missing_file_gives_defaults(tmp_path):
    config = Configuration(str(tmp_path / "missing.yml"))
    assert config.get_value("log_level") == "INFO"
    assert config.get_value("log_format") == "plain"
    assert config.get_value("seed") == 0
    assert config.get_value("size_budget") == DEFAULT_SIZE_BUDGET
    assert config.get_value("bounds.e_complex") == 9
    assert config.get_value("samples.group_laws") == 1000


def test_log_level_is_coerced(tmp_path):
    config = Configuration(write_config(tmp_path, "log_level: debug\n"))
    assert config.get_value("log_level") == "DEBUG"


@pytest.mark.parametrize(
    "text",
    [
        "log_level: LOUD\n",
        "bounds.ip_axioms: 0\n",
        "seed: -1\n",
        "log_format: xml\n",
        "unknown_key: 1\n",
        "- a list\n",
    ],
)
def test_invalid_configuration(tmp_path, text):
    with pytest.raises(ConfigurationInvalidException):
        Configuration(write_config(tmp_path, text))


def test_unparsable_configuration(tmp_path):
    path = write_config(tmp_path, "seed: [1\n")
    with pytest.raises(ConfigurationParsingException) as error:
        Configuration(path)
    assert error.value.file_name == path


def test_environment_overrides_size_budget(tmp_path, monkeypatch):
    monkeypatch.setenv(SIZE_BUDGET_ENV, "1234")
    config = Configuration(write_config(tmp_path, "size_budget: 99\n"))
    assert config.get_value("size_budget") == 1234
