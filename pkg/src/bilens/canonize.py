"""Canonizers: translators between external file formats and TableData.

The in-memory TableData form is canonical; each canonizer loads a file
into it and stores it back, with round-trip fidelity in both directions.
Two formats ship here, CSV and JSON, as deterministic file-based stand-ins
for external systems; new backends plug in by implementing the same
load/store pair.

CSV: UTF-8, first line is the header with `name:type` fields, comma
delimited, RFC-4180 quoting for fields containing commas, quotes or
newlines. JSON: a single object with `table`, `key`, `columns` and `rows`,
rows positionally aligned with columns. Scalars use the canonical text
renderings from :mod:`bilens.values`, carried as JSON strings except
booleans, which are JSON booleans. A UNIT column is never serialized.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, List, Optional, Protocol, Sequence

from .outcome import Outcome
from .relational.structure import ColumnSpec, ColumnType, TableSpec
from .relational.data import ColumnData, RowData, TableData
from .values import ValueKind, parse_value, render_value

__all__ = [
    "Canonizer",
    "CsvCanonizer",
    "JsonCanonizer",
    "CANONIZERS",
    "csv_load",
    "csv_store",
    "json_load",
    "json_store",
]

_FILE_TYPES = ("integer", "long", "decimal", "boolean", "datetime", "string")


class Canonizer(Protocol):
    """The extension point where further storage backends plug in."""

    format_name: str

    def load(self, location: str, table_name: str, key_column: str) -> Outcome[TableData]:
        ...

    def store(self, data: TableData, location: str) -> Outcome[str]:
        ...


def _parse_type(name: str) -> Optional[ColumnType]:
    if name in _FILE_TYPES:
        return ValueKind(name)
    return None


def _live_columns(spec: TableSpec) -> List[ColumnSpec]:
    return [c for c in spec.columns if c.type is not ValueKind.UNIT]


def _build_table(
    table_name: str,
    key_column: str,
    columns: Sequence[ColumnSpec],
    rows: Sequence[RowData],
) -> Outcome[TableData]:
    try:
        return Outcome.success(TableData(TableSpec(table_name, tuple(columns)), tuple(rows), key_column))
    except ValueError as exc:
        return Outcome.failure(str(exc))


def csv_load(path: str, table_name: str, key_column: str) -> Outcome[TableData]:
    """Load a CSV file into TableData; the table name and key column come
    from the caller since the format does not carry them."""
    try:
        with open(path, newline="", encoding="utf-8") as handle:
            records = list(csv.reader(handle))
    except OSError as exc:
        return Outcome.failure(f"cannot read {path}: {exc}")
    except UnicodeDecodeError as exc:
        return Outcome.failure(f"cannot read {path}: {exc}")
    if not records:
        return Outcome.failure(f"{path}: malformed header: file is empty")

    columns: List[ColumnSpec] = []
    for field in records[0]:
        name, separator, type_name = field.rpartition(":")
        column_type = _parse_type(type_name)
        if not separator or not name or column_type is None:
            return Outcome.failure(f"{path}: malformed header field {field!r}")
        columns.append(ColumnSpec(name, column_type))

    rows: List[RowData] = []
    for row_number, record in enumerate(records[1:], start=1):
        if len(record) != len(columns):
            return Outcome.failure(
                f"{path}: row {row_number}: expected {len(columns)} fields, got {len(record)}"
            )
        cells = []
        for column, text in zip(columns, record):
            parsed = parse_value(column.type, text)
            if parsed.is_failure:
                return Outcome.failure(
                    f"{path}: row {row_number}, column {column.name}: {parsed.error}"
                )
            cells.append(ColumnData(column.name, parsed.data))
        rows.append(RowData(tuple(cells)))

    return _build_table(table_name, key_column, columns, rows).map_error(
        lambda message: f"{path}: {message}"
    )


def csv_store(data: TableData, path: str) -> Outcome[str]:
    """Write TableData as CSV; UNIT columns are dropped. Returns the path."""
    columns = _live_columns(data.spec)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([f"{c.name}:{c.type.value}" for c in columns])
    live = {c.name for c in columns}
    for row in data.rows:
        writer.writerow(
            [
                render_value(column.type, cell.value)
                for cell, column in zip(row.cells, data.spec.columns)
                if cell.column_name in live
            ]
        )
    try:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            handle.write(buffer.getvalue())
    except OSError as exc:
        return Outcome.failure(f"cannot write {path}: {exc}")
    return Outcome.success(path)


def _json_cell(column: ColumnSpec, raw: object, where: str) -> Outcome[object]:
    if column.type is ValueKind.BOOLEAN:
        if isinstance(raw, bool):
            return Outcome.success(raw)
        return Outcome.failure(f"{where}: boolean cell must be a JSON boolean")
    if not isinstance(raw, str):
        return Outcome.failure(f"{where}: cell must be a JSON string")
    return parse_value(column.type, raw).map_error(lambda m: f"{where}: {m}")


def json_load(
    path: str, table_name: Optional[str] = None, key_column: Optional[str] = None
) -> Outcome[TableData]:
    """Load the JSON format; the file's own table and key fields are
    authoritative, and the optional arguments are checked against them."""
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except OSError as exc:
        return Outcome.failure(f"cannot read {path}: {exc}")
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        return Outcome.failure(f"{path}: not valid JSON: {exc}")

    if not isinstance(document, dict):
        return Outcome.failure(f"{path}: expected a JSON object")
    for field, expected in (("table", str), ("key", str), ("columns", list), ("rows", list)):
        if field not in document:
            return Outcome.failure(f"{path}: missing {field!r} field")
        if not isinstance(document[field], expected):
            return Outcome.failure(f"{path}: field {field!r} has the wrong type")
    if table_name is not None and document["table"] != table_name:
        return Outcome.failure(
            f"{path}: file holds table {document['table']!r}, expected {table_name!r}"
        )
    if key_column is not None and document["key"] != key_column:
        return Outcome.failure(
            f"{path}: file keyed by {document['key']!r}, expected {key_column!r}"
        )

    columns: List[ColumnSpec] = []
    for entry in document["columns"]:
        if not isinstance(entry, dict) or set(entry) != {"name", "type"}:
            return Outcome.failure(f"{path}: malformed column entry {entry!r}")
        column_type = _parse_type(entry["type"]) if isinstance(entry["type"], str) else None
        if not isinstance(entry["name"], str) or not entry["name"] or column_type is None:
            return Outcome.failure(f"{path}: malformed column entry {entry!r}")
        columns.append(ColumnSpec(entry["name"], column_type))

    rows: List[RowData] = []
    for row_number, record in enumerate(document["rows"], start=1):
        if not isinstance(record, list) or len(record) != len(columns):
            return Outcome.failure(
                f"{path}: row {row_number}: expected {len(columns)} cells"
            )
        cells = []
        for column, raw in zip(columns, record):
            where = f"row {row_number}, column {column.name}"
            parsed = _json_cell(column, raw, where)
            if parsed.is_failure:
                return Outcome.failure(f"{path}: {parsed.error}")
            cells.append(ColumnData(column.name, parsed.data))
        rows.append(RowData(tuple(cells)))

    return _build_table(document["table"], document["key"], columns, rows).map_error(
        lambda message: f"{path}: {message}"
    )


def json_store(data: TableData, path: str) -> Outcome[str]:
    """Write TableData as the JSON format; UNIT columns are dropped."""
    columns = _live_columns(data.spec)
    live = {c.name for c in columns}
    rows = []
    for row in data.rows:
        rows.append(
            [
                cell.value
                if column.type is ValueKind.BOOLEAN
                else render_value(column.type, cell.value)
                for cell, column in zip(row.cells, data.spec.columns)
                if cell.column_name in live
            ]
        )
    document = {
        "table": data.spec.name,
        "key": data.key_column,
        "columns": [{"name": c.name, "type": c.type.value} for c in columns],
        "rows": rows,
    }
    try:
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=2, ensure_ascii=False)
            handle.write("\n")
    except OSError as exc:
        return Outcome.failure(f"cannot write {path}: {exc}")
    return Outcome.success(path)


class CsvCanonizer:
    format_name = "csv"

    def load(self, location: str, table_name: str, key_column: str) -> Outcome[TableData]:
        return csv_load(location, table_name, key_column)

    def store(self, data: TableData, location: str) -> Outcome[str]:
        return csv_store(data, location)


class JsonCanonizer:
    format_name = "json"

    def load(self, location: str, table_name: str, key_column: str) -> Outcome[TableData]:
        return json_load(location, table_name, key_column)

    def store(self, data: TableData, location: str) -> Outcome[str]:
        return json_store(data, location)


CANONIZERS: Dict[str, Canonizer] = {"csv": CsvCanonizer(), "json": JsonCanonizer()}
