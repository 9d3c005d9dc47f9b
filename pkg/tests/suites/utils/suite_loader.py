"""Utility Functions for Loading Suites

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

import importlib.metadata

SUITE_GROUP = "superalg.suites"


def load_suite_class(entry_point_name: str, entry_point_group: str = SUITE_GROUP):
    """Returns the loaded entrypoint/suite-class for the given group and name."""
    all_entry_points = importlib.metadata.entry_points()
    if hasattr(all_entry_points, "select"):
        entry_points = all_entry_points.select(group=entry_point_group)
    else:
        entry_points = all_entry_points[entry_point_group]
    for entry_point in entry_points:
        if entry_point.name == entry_point_name:
            return entry_point.load()
    raise RuntimeError(f"Suite not found. {entry_point_name=}, {entry_point_group=}")
