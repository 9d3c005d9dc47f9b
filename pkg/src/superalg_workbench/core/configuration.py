"""Configuration Handling

Description:
    Builds the run configuration from an optional Yaml run file and the command line, and
    converts it into dataclasses:
    - RunConfig: characteristic, requested suites, resolution depth, seed, output settings and
        the size of the worker pool.
    - SuiteEntry: a single verification suite with its dependencies and the keyword arguments
        handed to its run method.
    Additionally, suite entries are sorted topologically with respect to their dependencies.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import graphlib
import inspect
import logging
import os
import pathlib
from dataclasses import dataclass, field
from typing import Any, Optional

from superalg_workbench.algebra.field import is_prime
from superalg_workbench.algebra.presets import DEFAULT_MAX_P
from superalg_workbench.core.utils.yaml_handler import YamlHandler

logger = logging.getLogger(__name__)

RUN_KEY = "run"
SUITES_KEY = "suites"
DEPENDENCY_KEY = "dependencies"
MAX_P_ENV = "SUPERALG_MAX_P"
CONF_PATH_ENV = "SUPERALG_CONF"
MAX_DEPTH = 12

SUITE_NAMES = (
    "pbw",
    "modules",
    "blocks",
    "endrings",
    "qci",
    "cocycles",
    "frobenius",
    "complexity",
    "iso-sweep",
)
OUTPUT_FORMATS = ("json", "markdown", "csv")
BUILTIN_DEPENDENCIES: dict[str, set[str]] = {
    "modules": {"pbw"},
    "blocks": {"pbw"},
    "endrings": {"pbw"},
    "iso-sweep": {"pbw"},
    "frobenius": {"pbw"},
    "cocycles": {"qci"},
}


class DictInitializedDataclass:
    """Allows to initialize a dataclass from a dictionary that contains more keys than the
    dataclass.
    """

    @classmethod
    def from_dict(cls, parameters: dict[str, Any]):
        filtered_dict = {
            k: v for k, v in parameters.items() if k in inspect.signature(cls).parameters
        }
        return cls(**filtered_dict)


@dataclass
class RunConfig(DictInitializedDataclass):
    """Declares the configuration of a verification run.

    Args:
        p: characteristic of the prime field.
        suites: names of the suites to run.
        depth: depth D of computed resolutions.
        seed: seed of all random choices; each suite derives its own generator from it.
        output_format: 'json', 'markdown' or 'csv'.
        out: report file, stdout if None.
        workers: size of the worker pool the suites run on.
        n_max: largest length n of the string and band families in sweeps.
    """

    p: int = 3
    suites: list[str] = field(default_factory=lambda: list(SUITE_NAMES))
    depth: int = 10
    seed: int = 0
    output_format: str = "json"
    out: Optional[str] = None
    workers: int = 2
    n_max: int = 1


@dataclass
class SuiteEntry:
    """A suite scheduled for execution.

    Args:
        name: entry-point name of the suite.
        dependencies: suites that have to finish first.
        options: keyword arguments for the run method of the suite.
    """

    name: str
    dependencies: set[str] = field(default_factory=set)
    options: Optional[dict] = None


class ConfigurationHandlerException(Exception):
    """Exception that is raised for invalid run configurations."""


def max_prime() -> int:
    """The largest supported characteristic; SUPERALG_MAX_P overrides the default."""
    value = os.getenv(MAX_P_ENV)
    if value is None:
        return DEFAULT_MAX_P
    try:
        return int(value)
    except ValueError as error:
        raise ConfigurationHandlerException(
            f"{MAX_P_ENV} must be an integer, got '{value}'"
        ) from error


def validate_run_config(run_config: RunConfig):
    """Raises ConfigurationHandlerException for an unusable run configuration."""
    if not isinstance(run_config.p, int) or not is_prime(run_config.p):
        raise ConfigurationHandlerException(f"p must be prime, got {run_config.p}")
    if run_config.p == 2:
        raise ConfigurationHandlerException("p must be odd")
    cap = max_prime()
    if run_config.p > cap:
        raise ConfigurationHandlerException(
            f"p={run_config.p} exceeds the cap {cap} (set {MAX_P_ENV} to raise it)"
        )
    if not 1 <= run_config.depth <= MAX_DEPTH:
        raise ConfigurationHandlerException(
            f"depth must satisfy 1 <= depth <= {MAX_DEPTH}, got {run_config.depth}"
        )
    if run_config.output_format not in OUTPUT_FORMATS:
        raise ConfigurationHandlerException(
            f"Unknown output format '{run_config.output_format}', expected one of {OUTPUT_FORMATS}"
        )
    if run_config.workers < 1:
        raise ConfigurationHandlerException(f"workers must be positive, got {run_config.workers}")
    if run_config.n_max < 0:
        raise ConfigurationHandlerException(f"n_max must be non-negative, got {run_config.n_max}")
    unknown = [name for name in run_config.suites if name not in SUITE_NAMES]
    if unknown:
        raise ConfigurationHandlerException(
            f"Unknown suites {unknown}. Available suites: {list(SUITE_NAMES)}"
        )


def get_configuration(
    configuration_path: Optional[pathlib.Path],
    p: Optional[int] = None,
    suites: Optional[list[str]] = None,
    depth: Optional[int] = None,
    seed: Optional[int] = None,
    output_format: Optional[str] = None,
    out: Optional[str] = None,
    workers: Optional[int] = None,
    n_max: Optional[int] = None,
) -> tuple[RunConfig, list[SuiteEntry]]:
    """Reads in the given configuration and conditionally overrides it with the given parameters.

    Args:
        configuration_path: optional path to a Yaml run file.
        p, suites, depth, seed, output_format, out, workers, n_max: command-line values; None
            keeps the value of the file (or the default).
    Returns:
        - the validated run configuration.
        - the dependency-sorted suite entries of the requested suites.
    """
    run_config, suite_options = get_file_configuration(configuration_path)

    overrides = {
        "p": p,
        "suites": suites,
        "depth": depth,
        "seed": seed,
        "output_format": output_format,
        "out": out,
        "workers": workers,
        "n_max": n_max,
    }
    for key, value in overrides.items():
        if value is not None:
            setattr(run_config, key, value)

    validate_run_config(run_config)
    suite_entries = build_suite_entries(run_config.suites, suite_options)
    return run_config, topological_sort(suite_entries)


def get_file_configuration(path: Optional[pathlib.Path]) -> tuple[RunConfig, dict[str, dict]]:
    """Run configuration and raw suite options of the Yaml run file, defaults without a file."""
    if path is None:
        return RunConfig(), {}
    config = YamlHandler.get_config(str(path), CONF_PATH_ENV)
    run_config = RunConfig.from_dict(config.get(RUN_KEY) or {})
    suite_options = config.get(SUITES_KEY) or {}
    if not isinstance(suite_options, dict):
        raise ConfigurationHandlerException(
            f"'{SUITES_KEY}' in {path} must map suite names to option mappings"
        )
    if suite_options and RUN_KEY in config and "suites" not in (config.get(RUN_KEY) or {}):
        run_config.suites = list(suite_options)
    return run_config, {key: dict(value or {}) for key, value in suite_options.items()}


def build_suite_entries(requested: list[str], suite_options: dict[str, dict]) -> list[SuiteEntry]:
    """Takes the requested suite names and their raw options and converts them into SuiteEntries.

    Dependencies on suites that are not requested are dropped, so every requested suite can
    also run on its own.
    """
    entries = []
    for name in dict.fromkeys(requested):
        options = dict(suite_options.get(name, {}))
        extra = options.pop(DEPENDENCY_KEY, None) or []
        unknown = [dep for dep in extra if dep not in SUITE_NAMES]
        if unknown:
            raise ConfigurationHandlerException(
                f"Missing dependency keys for suite: {name}. Unknown suites: {unknown}"
            )
        dependencies = (BUILTIN_DEPENDENCIES.get(name, set()) | set(extra)) & set(requested)
        entries.append(SuiteEntry(name, dependencies, options or None))
    return entries


def topological_sort(suite_entries: list[SuiteEntry]) -> list[SuiteEntry]:
    """Sorts the suite entries such that every suite comes after its dependencies.

    NOTE: Two suites are not allowed to depend on each other.

    Args:
        suite_entries: list of unsorted suite entries.
    Returns:
        list of dependency-sorted suite entries.
    """
    graph = {entry.name: set(entry.dependencies) for entry in suite_entries}
    suite_entry_lut = {entry.name: entry for entry in suite_entries}
    try:
        sorted_entry_names = list(graphlib.TopologicalSorter(graph).static_order())
    except graphlib.CycleError as error:
        raise ConfigurationHandlerException(
            f"Failed to perform topological sort due to error: {str(error)} "
            "NOTE: No circular relations allowed."
        ) from error
    logger.info("Successfully sorted suites: %s", sorted_entry_names)
    return [suite_entry_lut[name] for name in sorted_entry_names]
