"""Declarative column mapping used by the sync command line.

A mapping file is a single JSON object naming the two tables, the key
column, and one entry per column: identity entries carry `name`, renames
carry `left` and `right`, inserts carry `right` plus a `default`, deletes
carry `left` plus a `default`. Types and defaults use the same canonical
renderings as the file formats. The mapping deliberately expresses only
the relational lens kinds; identity value lenses are attached per column
type.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Tuple

from .outcome import Outcome
from .relational.data import (
    ColumnDataLens,
    TableDataLens,
    data_delete,
    data_identity,
    data_insert,
    data_rename,
    make_table_data_lens,
)
from .relational.structure import (
    ColumnLens,
    column_delete,
    column_identity,
    column_insert,
    column_rename,
    table_identity_lens,
    table_rename_lens,
)
from .values import ValueKind, identity_lens, parse_value

__all__ = ["ColumnMapping", "MappingConfig", "load_mapping", "build_lens"]

_TYPE_NAMES = ("integer", "long", "decimal", "boolean", "datetime", "string")
_KINDS = ("identity", "rename", "insert", "delete")


@dataclass(frozen=True)
class ColumnMapping:
    kind: str
    left: Optional[str]
    right: Optional[str]
    type: ValueKind
    default: Optional[object] = None

    def label(self) -> str:
        return self.left or self.right or "<unnamed>"


@dataclass(frozen=True)
class MappingConfig:
    left_table: str
    right_table: str
    key: str
    columns: Tuple[ColumnMapping, ...]


def _parse_default(type_: ValueKind, raw: object, label: str) -> Outcome[object]:
    if type_ is ValueKind.BOOLEAN and isinstance(raw, bool):
        return Outcome.success(raw)
    if not isinstance(raw, str):
        return Outcome.failure(
            f"column {label!r}: default must be a string rendering"
            + (" or a JSON boolean" if type_ is ValueKind.BOOLEAN else "")
        )
    return parse_value(type_, raw).map_error(lambda m: f"column {label!r}: default: {m}")


def _parse_column(entry: object, index: int) -> Outcome[ColumnMapping]:
    where = f"columns[{index}]"
    if not isinstance(entry, dict):
        return Outcome.failure(f"{where}: expected an object")
    kind = entry.get("kind")
    if kind not in _KINDS:
        return Outcome.failure(f"{where}: unknown kind {kind!r}")
    type_name = entry.get("type")
    if type_name not in _TYPE_NAMES:
        return Outcome.failure(f"{where}: unknown type {type_name!r}")
    type_ = ValueKind(type_name)

    def need(field: str) -> Outcome[str]:
        value = entry.get(field)
        if not isinstance(value, str) or not value:
            return Outcome.failure(f"{where}: {kind} entry needs a non-empty {field!r}")
        return Outcome.success(value)

    def forbid(*fields: str) -> Optional[str]:
        for field in fields:
            if field in entry:
                return f"{where}: {kind} entry does not take {field!r}"
        return None

    if kind == "identity":
        problem = forbid("left", "right", "default")
        if problem:
            return Outcome.failure(problem)
        return need("name").map(lambda n: ColumnMapping("identity", n, n, type_))
    if kind == "rename":
        problem = forbid("name", "default")
        if problem:
            return Outcome.failure(problem)
        return need("left").bind(
            lambda l: need("right").map(lambda r: ColumnMapping("rename", l, r, type_))
        )
    if kind == "insert":
        problem = forbid("name", "left")
        if problem:
            return Outcome.failure(problem)
        if "default" not in entry:
            return Outcome.failure(f"{where}: insert entry needs a 'default'")
        return need("right").bind(
            lambda r: _parse_default(type_, entry["default"], r).map(
                lambda d: ColumnMapping("insert", None, r, type_, d)
            )
        )
    problem = forbid("name", "right")
    if problem:
        return Outcome.failure(problem)
    if "default" not in entry:
        return Outcome.failure(f"{where}: delete entry needs a 'default'")
    return need("left").bind(
        lambda l: _parse_default(type_, entry["default"], l).map(
            lambda d: ColumnMapping("delete", l, None, type_, d)
        )
    )


def parse_mapping(text: str) -> Outcome[MappingConfig]:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        return Outcome.failure(f"mapping is not valid JSON: {exc}")
    if not isinstance(document, dict):
        return Outcome.failure("mapping must be a JSON object")
    for field in ("leftTable", "rightTable", "key"):
        if not isinstance(document.get(field), str) or not document[field]:
            return Outcome.failure(f"mapping needs a non-empty {field!r} string")
    entries = document.get("columns")
    if not isinstance(entries, list) or not entries:
        return Outcome.failure("mapping needs a non-empty 'columns' array")
    columns = []
    for index, entry in enumerate(entries):
        parsed = _parse_column(entry, index)
        if parsed.is_failure:
            return Outcome.failure(parsed.error)
        columns.append(parsed.data)
    return Outcome.success(
        MappingConfig(
            left_table=document["leftTable"],
            right_table=document["rightTable"],
            key=document["key"],
            columns=tuple(columns),
        )
    )


def load_mapping(path: str) -> Outcome[MappingConfig]:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        return Outcome.failure(f"cannot read {path}: {exc}")
    return parse_mapping(text)


def _column_lenses(column: ColumnMapping) -> Tuple[ColumnLens, ColumnDataLens]:
    if column.kind == "identity":
        structural = column_identity(column.left, column.type)
        return structural, data_identity(structural, identity_lens(column.type))
    if column.kind == "rename":
        structural = column_rename(column.left, column.right, column.type)
        return structural, data_rename(structural, identity_lens(column.type))
    if column.kind == "insert":
        structural = column_insert(column.right, column.type)
        return structural, data_insert(structural, column.default)
    structural = column_delete(column.left, column.type)
    return structural, data_delete(structural, column.default)


def build_lens(config: MappingConfig) -> Outcome[TableDataLens]:
    """Materialize the table data lens a mapping describes."""
    pairs = [_column_lenses(c) for c in config.columns]
    structural_lenses = tuple(p[0] for p in pairs)
    data_lenses = tuple(p[1] for p in pairs)
    try:
        if config.left_table == config.right_table:
            structural = table_identity_lens(config.left_table, structural_lenses)
        else:
            structural = table_rename_lens(
                config.left_table, config.right_table, structural_lenses
            )
    except ValueError as exc:
        return Outcome.failure(str(exc))
    return make_table_data_lens(structural, data_lenses, config.key)
