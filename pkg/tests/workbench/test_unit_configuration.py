"""Tests for the run configuration

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import os
import pathlib

import pytest

from superalg_workbench.core import configuration
from superalg_workbench.core.configuration import (
    SUITE_NAMES,
    ConfigurationHandlerException,
    RunConfig,
    validate_run_config,
)
from superalg_workbench.core.utils.yaml_handler import InvalidConfPathError

CONFIGURATIONS = pathlib.Path(__file__).parent.resolve() / "configurations"


@pytest.mark.parametrize(
    "overrides, message",
    [
        ({"p": 4}, "p must be prime, got 4"),
        ({"p": 2}, "p must be odd"),
        ({"p": 17}, "exceeds the cap 13"),
        ({"depth": 0}, "depth must satisfy 1 <= depth <= 12, got 0"),
        ({"depth": 13}, "depth must satisfy 1 <= depth <= 12, got 13"),
        ({"output_format": "xml"}, "Unknown output format 'xml'"),
        ({"workers": 0}, "workers must be positive, got 0"),
        ({"n_max": -1}, "n_max must be non-negative, got -1"),
        ({"suites": ["pbw", "release"]}, "Unknown suites ['release']"),
    ],
)
def test_validation_messages(overrides: dict, message: str):
    """Tests, if every unusable run configuration is rejected with a message naming the field."""
    with pytest.raises(ConfigurationHandlerException) as exc_info:
        validate_run_config(RunConfig(**overrides))
    assert message in exc_info.value.args[0]


def test_cap_can_be_raised_by_environment(mocker):
    """Tests, if SUPERALG_MAX_P raises the cap on the characteristic."""
    mocker.patch.dict(os.environ, {configuration.MAX_P_ENV: "17"})
    validate_run_config(RunConfig(p=17))

    mocker.patch.dict(os.environ, {configuration.MAX_P_ENV: "seventeen"})
    with pytest.raises(ConfigurationHandlerException):
        validate_run_config(RunConfig(p=17))


def test_defaults_without_file():
    """Tests, if a run without configuration file requests every suite with the defaults."""
    run_config, suite_entries = configuration.get_configuration(None)

    assert run_config == RunConfig()
    assert sorted(entry.name for entry in suite_entries) == sorted(SUITE_NAMES)
    order = [entry.name for entry in suite_entries]
    assert order.index("cocycles") > order.index("qci")
    assert all(order.index(name) > order.index("pbw") for name in ("modules", "endrings"))


def test_command_line_overrides_file():
    """Tests, if command line values override the file while unset values keep the file value."""
    run_config, suite_entries = configuration.get_configuration(
        CONFIGURATIONS / "test_config_default.yaml",
        p=3,
        suites=["qci", "cocycles"],
        depth=2,
        output_format="json",
    )

    assert run_config.p == 3
    assert run_config.depth == 2
    assert run_config.output_format == "json"
    assert run_config.seed == 7
    assert run_config.workers == 3
    assert [entry.name for entry in suite_entries] == ["qci", "cocycles"]


def test_configuration_path_from_environment(mocker):
    """Tests, if SUPERALG_CONF takes precedence over the given path."""
    mocker.patch.dict(
        os.environ, {configuration.CONF_PATH_ENV: str(CONFIGURATIONS / "test_config_default.yaml")}
    )
    run_config, _ = configuration.get_configuration(pathlib.Path("missing.yaml"))
    assert run_config.p == 5


def test_missing_file(tmp_path: pathlib.Path):
    """Tests, if a missing configuration file raises InvalidConfPathError."""
    with pytest.raises(InvalidConfPathError):
        configuration.get_configuration(tmp_path / "missing.yaml")


def test_suites_must_be_a_mapping():
    """Tests, if a list in the 'suites' section is rejected."""
    with pytest.raises(ConfigurationHandlerException) as exc_info:
        configuration.get_configuration(CONFIGURATIONS / "test_config_invalid_suites.yaml")
    assert "must map suite names to option mappings" in exc_info.value.args[0]


def test_empty_file_yields_defaults(tmp_path: pathlib.Path):
    """Tests, if an empty Yaml file is read as the default configuration."""
    configuration_path = tmp_path / "empty.yaml"
    configuration_path.write_text("", encoding="utf-8")

    run_config, _ = configuration.get_configuration(configuration_path)
    assert run_config == RunConfig()


def test_unknown_run_keys_are_ignored(tmp_path: pathlib.Path):
    """Tests, if keys in the 'run' section that RunConfig does not know are ignored."""
    configuration_path = tmp_path / "extra.yaml"
    configuration_path.write_text("run:\n  p: 7\n  colour: blue\n", encoding="utf-8")

    run_config, _ = configuration.get_configuration(configuration_path)
    assert run_config.p == 7
    assert not hasattr(run_config, "colour")
