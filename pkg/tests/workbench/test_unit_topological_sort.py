"""Tests for the suite order of run configurations

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import pathlib

import pytest

from superalg_workbench.core import configuration

CONFIGURATIONS = pathlib.Path(__file__).parent.resolve() / "configurations"


def test_topological_sort():
    """Tests, if the topological sort orders the suite entries according to their dependencies."""
    configuration_path = CONFIGURATIONS / "test_config_default.yaml"

    _, suite_entries = configuration.get_configuration(configuration_path)

    predicted_order = [entry.name for entry in suite_entries]
    assert sorted(predicted_order) == ["cocycles", "frobenius", "pbw", "qci"]
    assert predicted_order.index("cocycles") > predicted_order.index("qci")
    assert predicted_order.index("qci") > predicted_order.index("pbw")
    assert predicted_order.index("frobenius") > predicted_order.index("pbw")


def test_dependencies_on_unrequested_suites_are_dropped():
    """Tests, if a dependency on a suite that is not part of the run is dropped, such that every
    suite can also run on its own."""
    configuration_path = CONFIGURATIONS / "test_config_default.yaml"

    _, suite_entries = configuration.get_configuration(configuration_path)

    entries = {entry.name: entry for entry in suite_entries}
    assert entries["frobenius"].dependencies == {"pbw"}
    assert entries["frobenius"].options is None
    assert entries["qci"].options == {"configurations": 2}


def test_error_on_bidirectional_relation():
    """Tests, if the topological sort raises an exception, if it detects a bidirectional
    relation."""
    configuration_path = CONFIGURATIONS / "test_config_circle_relation.yaml"

    with pytest.raises(configuration.ConfigurationHandlerException) as exc_info:
        configuration.get_configuration(configuration_path)
    assert "NOTE: No circular relations allowed." in exc_info.value.args[0]


def test_error_on_unknown_dependency():
    """Tests, if a dependency on a suite that does not exist is reported."""
    configuration_path = CONFIGURATIONS / "test_config_unknown_dependency.yaml"

    with pytest.raises(configuration.ConfigurationHandlerException) as exc_info:
        configuration.get_configuration(configuration_path)
    assert "Unknown suites: ['release-notes']" in exc_info.value.args[0]
