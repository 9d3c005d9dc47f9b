"""Reports

Description:
    Result records of verification runs and their renderers:
    - Verdict: one checked claim with its anchor, outcome, detail text and optional certificate.
    - SuiteReport: the verdicts and data tables of one suite.
    - RunReport: the configuration echo and all suite reports, sorted by suite name.

    Reports render to json (sorted keys, byte-identical for equal runs), markdown (one table per
    suite) and csv. Data tables, such as resolution growth or QCI Ext dimensions, are written as
    separate csv files next to the report.

Authors:
    - superalg-workbench contributors

Copyright (c) 2026 superalg-workbench contributors

SPDX-License-Identifier: MIT
"""

from __future__ import annotations

import csv
import enum
import io
import json
import logging
import pathlib
from typing import Any, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field, field_validator

from superalg_workbench.algebra.serialization import SCHEMA_VERSION

logger = logging.getLogger(__name__)

VERDICT_COLUMNS = ("suite", "claim", "anchor", "passed", "detail")
GROWTH_COLUMNS = ("degree", "rank", "total_dim")
QCI_EXT_COLUMNS = ("n", "computed", "closed_form", "oracle")
CATALOGUE_COLUMNS = ("family", "lam", "n", "c", "dim", "parity_changed", "label")

Cell = Union[int, str, bool, None]


class ReportError(Exception):
    """Raised for unknown output formats or unwritable report files."""


def to_jsonable(value: Any) -> Any:
    """Converts numpy data, tuples, sets and enums into plain JSON values."""
    if isinstance(value, np.ndarray):
        return [to_jsonable(item) for item in value.tolist()]
    if isinstance(value, enum.Enum):
        return to_jsonable(value.value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted((to_jsonable(item) for item in value), key=repr)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    return value


class Verdict(BaseModel):
    claim: str
    anchor: str
    passed: bool
    detail: str = ""
    certificate: Optional[dict[str, Any]] = None

    @field_validator("certificate", mode="before")
    @classmethod
    def _plain_certificate(cls, value):
        return None if value is None else to_jsonable(value)


class DataTable(BaseModel):
    columns: list[str]
    rows: list[list[Cell]] = Field(default_factory=list)

    @field_validator("rows", mode="before")
    @classmethod
    def _plain_rows(cls, value):
        return to_jsonable(value)


class SuiteReport(BaseModel):
    suite: str
    verdicts: list[Verdict] = Field(default_factory=list)
    tables: dict[str, DataTable] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(verdict.passed for verdict in self.verdicts)

    def add(
        self,
        claim: str,
        anchor: str,
        passed: bool,
        detail: str = "",
        certificate: Optional[dict[str, Any]] = None,
    ) -> Verdict:
        verdict = Verdict(
            claim=claim, anchor=anchor, passed=bool(passed), detail=detail, certificate=certificate
        )
        self.verdicts.append(verdict)
        return verdict

    def add_table(self, name: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]):
        self.tables[name] = DataTable(columns=list(columns), rows=[list(row) for row in rows])

    def summary(self) -> str:
        passed = sum(verdict.passed for verdict in self.verdicts)
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {passed}/{len(self.verdicts)} claims passed [{status}]"


class RunReport(BaseModel):
    version: int = SCHEMA_VERSION
    config: dict[str, Any]
    suites: list[SuiteReport] = Field(default_factory=list)

    @field_validator("suites")
    @classmethod
    def _sorted_suites(cls, value: list[SuiteReport]):
        return sorted(value, key=lambda report: report.suite)

    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.suites)

    def first_failure(self) -> Optional[tuple[str, Verdict]]:
        for report in self.suites:
            for verdict in report.verdicts:
                if not verdict.passed:
                    return report.suite, verdict
        return None


def render_json(report: BaseModel) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2) + "\n"


def _markdown_cell(value: Any) -> str:
    return str(value).replace("|", "\\|").replace("\n", " ")


def render_markdown(report: RunReport) -> str:
    lines = ["# Verification Report", ""]
    lines.append(
        "Configuration: "
        + ", ".join(
            f"{key}={_markdown_cell(value)}" for key, value in sorted(report.config.items())
        )
    )
    for suite in report.suites:
        lines.extend(["", f"## {suite.suite}", "", "| claim | anchor | passed | detail |"])
        lines.append("|---|---|---|---|")
        for verdict in suite.verdicts:
            mark = "yes" if verdict.passed else "**no**"
            lines.append(
                f"| {_markdown_cell(verdict.claim)} | {_markdown_cell(verdict.anchor)} | {mark} "
                f"| {_markdown_cell(verdict.detail)} |"
            )
        for name, table in sorted(suite.tables.items()):
            lines.extend(["", f"### {suite.suite}: {name}", ""])
            lines.append("| " + " | ".join(table.columns) + " |")
            lines.append("|" + "---|" * len(table.columns))
            for row in table.rows:
                lines.append("| " + " | ".join(_markdown_cell(cell) for cell in row) + " |")
    return "\n".join(lines) + "\n"


def _csv_text(columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    writer.writerows(["" if cell is None else cell for cell in row] for row in rows)
    return buffer.getvalue()


def render_csv(report: RunReport) -> str:
    rows = [
        (suite.suite, verdict.claim, verdict.anchor, verdict.passed, verdict.detail)
        for suite in report.suites
        for verdict in suite.verdicts
    ]
    return _csv_text(VERDICT_COLUMNS, rows)


RENDERERS = {"json": render_json, "markdown": render_markdown, "csv": render_csv}


def render(report: RunReport, output_format: str) -> str:
    if output_format not in RENDERERS:
        raise ReportError(f"Unknown output format '{output_format}'")
    return RENDERERS[output_format](report)  # type: ignore[operator]


def _write(path: pathlib.Path, text: str):
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as error:
        raise ReportError(f"Failed to write report file {path}") from error


def write_report(
    report: RunReport, output_format: str, out: Optional[str] = None
) -> list[pathlib.Path]:
    """Writes the rendered report to `out` (stdout if None) and returns the written files.

    With an output file, every data table is additionally written to
    `<stem>.<suite>.<table>.csv` in the same directory.
    """
    text = render(report, output_format)
    if out is None:
        print(text, end="")
        return []
    path = pathlib.Path(out)
    _write(path, text)
    written = [path]
    for suite in report.suites:
        for name, table in sorted(suite.tables.items()):
            table_path = path.with_name(f"{path.stem}.{suite.suite}.{name}.csv")
            _write(table_path, _csv_text(table.columns, table.rows))
            written.append(table_path)
    logger.info("Report written to %s", [str(item) for item in written])
    return written


class CatalogueEntry(BaseModel):
    family: str
    lam: int
    n: int
    c: Optional[int] = None
    dim: int
    parity_changed: bool
    label: str


class CatalogueReport(BaseModel):
    version: int = SCHEMA_VERSION
    p: int
    n_max: int
    entries: list[CatalogueEntry]


def render_catalogue(report: CatalogueReport, output_format: str) -> str:
    if output_format == "json":
        return render_json(report)
    rows = [[getattr(entry, column) for column in CATALOGUE_COLUMNS] for entry in report.entries]
    if output_format == "csv":
        return _csv_text(CATALOGUE_COLUMNS, rows)
    if output_format == "markdown":
        lines = [f"# Indecomposable catalogue over F_{report.p} (n <= {report.n_max})", ""]
        lines.append("| " + " | ".join(CATALOGUE_COLUMNS) + " |")
        lines.append("|" + "---|" * len(CATALOGUE_COLUMNS))
        for row in rows:
            cells = ("" if cell is None else _markdown_cell(cell) for cell in row)
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"
    raise ReportError(f"Unknown output format '{output_format}'")
