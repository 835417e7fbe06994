"""Data-carrying relational model and the structured data lenses over it.

A table data lens pairs a structural table lens with one data lens per
column: identity and rename columns carry a value lens, insert and delete
columns carry a default value for the side that has no data. The pairing
is fixed; combining, say, a structural delete with a data insert is
rejected at construction because the two would disagree about which side
owns the data.

Rows are aligned by an explicit key column during puts. Matched rows are
updated cell-wise, source rows without a match are created, and target
rows without a match are retained, so a put merges rather than truncates.
With equal key sets on both sides the round-tripping laws hold exactly;
with differing key sets a full sync converges both sides on the key union.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..core import SymmetricLens
from ..outcome import Outcome
from ..values import UNIT, ValueKind, check_value
from .structure import (
    ColumnLens,
    Direction,
    LensKind,
    TableLens,
    TableSpec,
    apply_table_lens,
)

__all__ = [
    "ColumnData",
    "RowData",
    "TableData",
    "ColumnDataLens",
    "TableDataLens",
    "data_identity",
    "data_rename",
    "data_insert",
    "data_delete",
    "data_disconnect",
    "validate_column_data_lens",
    "make_table_data_lens",
    "table_data_create_right",
    "table_data_create_left",
    "table_data_put_right",
    "table_data_put_left",
    "full_sync",
]


@dataclass(frozen=True)
class ColumnData:
    """One cell: the owning column's name and a typed value."""

    column_name: str
    value: object


@dataclass(frozen=True)
class RowData:
    """Cells ordered exactly like the owning table's columns."""

    cells: Tuple[ColumnData, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cells", tuple(self.cells))


@dataclass(frozen=True)
class TableData:
    """A table shape, its rows, and the column whose values identify rows.

    Construction validates that every row aligns with the shape, that cell
    values inhabit their column types (UNIT only in UNIT columns), and that
    key values are pairwise distinct.
    """

    spec: TableSpec
    rows: Tuple[RowData, ...]
    key_column: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        if self.spec.column(self.key_column) is None:
            raise ValueError(
                f"key column {self.key_column!r} not in table {self.spec.name!r}"
            )
        seen_keys = set()
        for row_number, row in enumerate(self.rows, start=1):
            if len(row.cells) != len(self.spec.columns):
                raise ValueError(
                    f"row {row_number} has {len(row.cells)} cells, "
                    f"expected {len(self.spec.columns)}"
                )
            for cell, column in zip(row.cells, self.spec.columns):
                if cell.column_name != column.name:
                    raise ValueError(
                        f"row {row_number}: cell {cell.column_name!r} out of place, "
                        f"expected {column.name!r}"
                    )
                problem = check_value(cell.value, column.type)
                if problem is not None:
                    raise ValueError(f"row {row_number}, column {column.name!r}: {problem}")
                if column.type is not ValueKind.UNIT and cell.value is UNIT:
                    raise ValueError(
                        f"row {row_number}, column {column.name!r}: UNIT in a live column"
                    )
            key = self.key_of(row)
            if key in seen_keys:
                raise ValueError(f"duplicate key {key!r} in table {self.spec.name!r}")
            seen_keys.add(key)

    def key_of(self, row: RowData) -> object:
        for cell in row.cells:
            if cell.column_name == self.key_column:
                return cell.value
        raise ValueError(f"row lacks key column {self.key_column!r}")


@dataclass(frozen=True)
class ColumnDataLens:
    """A structural column lens paired with its data behavior.

    `kind` is the data-side kind and must match the structural kind; the
    payload is a value lens for identity/rename and a default value for
    insert/delete. Build instances through the data_* constructors and
    validate the whole set with :func:`make_table_data_lens`.
    """

    structural: ColumnLens
    kind: LensKind
    value_lens: Optional[SymmetricLens] = None
    default_value: Optional[object] = None


def data_identity(structural: ColumnLens, value_lens: SymmetricLens) -> ColumnDataLens:
    return ColumnDataLens(structural, LensKind.IDENTITY, value_lens=value_lens)


def data_rename(structural: ColumnLens, value_lens: SymmetricLens) -> ColumnDataLens:
    return ColumnDataLens(structural, LensKind.RENAME, value_lens=value_lens)


def data_insert(structural: ColumnLens, default_value: object) -> ColumnDataLens:
    return ColumnDataLens(structural, LensKind.INSERT, default_value=default_value)


def data_delete(structural: ColumnLens, default_value: object) -> ColumnDataLens:
    return ColumnDataLens(structural, LensKind.DELETE, default_value=default_value)


def data_disconnect(structural: ColumnLens) -> ColumnDataLens:
    """Constructible for completeness; always rejected by validation."""
    return ColumnDataLens(structural, LensKind.DISCONNECT)


def _column_label(lens: ColumnDataLens) -> str:
    side = lens.structural.left or lens.structural.right
    return side.name if side is not None else "<unnamed>"


def validate_column_data_lens(lens: ColumnDataLens) -> Outcome[ColumnDataLens]:
    """Check the structural/data kind pairing for one column."""
    name = _column_label(lens)
    if lens.kind is not lens.structural.kind:
        return Outcome.failure(
            f"column {name!r}: {lens.kind.value} data lens paired with "
            f"{lens.structural.kind.value} structural lens"
        )
    if lens.kind in (LensKind.IDENTITY, LensKind.RENAME):
        if lens.value_lens is None:
            return Outcome.failure(f"column {name!r}: {lens.kind.value} data lens needs a value lens")
        if lens.default_value is not None:
            return Outcome.failure(
                f"column {name!r}: {lens.kind.value} data lens cannot carry a default value"
            )
    elif lens.kind in (LensKind.INSERT, LensKind.DELETE):
        if lens.default_value is None:
            return Outcome.failure(
                f"column {name!r}: {lens.kind.value} data lens needs a default value"
            )
        if lens.value_lens is not None:
            return Outcome.failure(
                f"column {name!r}: {lens.kind.value} data lens cannot carry a value lens"
            )
        side = lens.structural.left if lens.kind is LensKind.DELETE else lens.structural.right
        if side is not None:
            problem = check_value(lens.default_value, side.type)
            if problem is not None:
                return Outcome.failure(f"column {name!r}: default value: {problem}")
    else:
        return Outcome.failure(f"column {name!r}: disconnect data lenses are not supported")
    return Outcome.success(lens)


@dataclass(frozen=True)
class TableDataLens:
    structural: TableLens
    column_data_lenses: Tuple[ColumnDataLens, ...]
    key_column: str

    def create_right(self, left: TableData) -> Outcome[TableData]:
        return table_data_create_right(self, left)

    def create_left(self, right: TableData) -> Outcome[TableData]:
        return table_data_create_left(self, right)

    def put_right(self, left: TableData, right: TableData) -> Outcome[TableData]:
        return table_data_put_right(self, left, right)

    def put_left(self, right: TableData, left: TableData) -> Outcome[TableData]:
        return table_data_put_left(self, right, left)

    def as_symmetric(self) -> SymmetricLens[TableData, TableData]:
        return SymmetricLens(
            create_right=self.create_right,
            create_left=self.create_left,
            put_right=self.put_right,
            put_left=self.put_left,
        )


def make_table_data_lens(
    structural: TableLens,
    column_data_lenses: Sequence[ColumnDataLens],
    key_column: str,
) -> Outcome[TableDataLens]:
    """Validate and assemble a table data lens.

    Succeeds only when every column data lens matches its structural lens
    per the fixed kind pairing, the data lenses line up one-to-one with the
    structural table lens's column lenses, and the key column is covered by
    an identity lens.
    """
    if structural.kind not in (LensKind.IDENTITY, LensKind.RENAME):
        return Outcome.failure("table data lenses need a table present on both sides")
    lenses = tuple(column_data_lenses)
    if len(lenses) != len(structural.column_lenses):
        return Outcome.failure(
            f"{len(lenses)} column data lenses for {len(structural.column_lenses)} "
            "structural column lenses"
        )
    for data_lens, column_lens in zip(lenses, structural.column_lenses):
        if data_lens.structural != column_lens:
            return Outcome.failure(
                f"column {_column_label(data_lens)!r}: data lens references a different "
                "structural lens than the table lens at the same position"
            )
        verdict = validate_column_data_lens(data_lens)
        if verdict.is_failure:
            return Outcome.failure(verdict.error)
    key_covered = any(
        l.kind is LensKind.IDENTITY
        and l.structural.left is not None
        and l.structural.left.name == key_column
        for l in lenses
    )
    if not key_covered:
        return Outcome.failure(
            f"key column {key_column!r} must be covered by an identity column data lens"
        )
    return Outcome.success(TableDataLens(structural, lenses, key_column))


def _cells_by_name(row: RowData) -> Dict[str, object]:
    return {cell.column_name: cell.value for cell in row.cells}


def _conformance_error(
    lens: TableDataLens, spec: TableSpec, l2r: bool, role: str
) -> Optional[str]:
    """Source tables must carry every near-side column; targets must carry
    the identity/rename far columns (insert/delete ones may be absent)."""
    names = {c.name for c in spec.columns}
    for data_lens in lens.column_data_lenses:
        structural = data_lens.structural
        if role == "source":
            side = structural.left if l2r else structural.right
        else:
            side = structural.right if l2r else structural.left
            if data_lens.kind not in (LensKind.IDENTITY, LensKind.RENAME):
                continue
        if side is not None and side.name not in names:
            return f"{role} table {spec.name!r} lacks column {side.name!r}"
    return None


def _transform_row(
    lens: TableDataLens,
    l2r: bool,
    source_values: Dict[str, object],
    target_values: Optional[Dict[str, object]],
    key: object,
) -> Outcome[List[ColumnData]]:
    """Build the destination cells for one source row; `target_values` is
    the matched stale row, or None for create semantics."""
    cells: List[ColumnData] = []
    for data_lens in lens.column_data_lenses:
        structural = data_lens.structural
        near = structural.left if l2r else structural.right
        far = structural.right if l2r else structural.left
        if far is None:
            continue
        if data_lens.kind in (LensKind.IDENTITY, LensKind.RENAME):
            source_value = source_values[near.name]
            value_lens = data_lens.value_lens
            if target_values is not None and far.name in target_values:
                func = value_lens.put_right if l2r else value_lens.put_left
                result = func(source_value, target_values[far.name])
            else:
                func = value_lens.create_right if l2r else value_lens.create_left
                result = func(source_value)
            if result.is_failure:
                return Outcome.failure(
                    f"row key={key!r}, column {far.name!r}: {result.error}"
                )
            cells.append(ColumnData(far.name, result.data))
        else:
            # insert going right / delete going left: data is exclusive to
            # the far side, so keep what is there or fall back to the default
            if target_values is not None and far.name in target_values:
                cells.append(ColumnData(far.name, target_values[far.name]))
            else:
                cells.append(ColumnData(far.name, data_lens.default_value))
    return Outcome.success(cells)


def _reorder_row(
    spec: TableSpec, values: Dict[str, object], defaults: Dict[str, object], key: object
) -> Outcome[RowData]:
    """Lay out a retained row's values in the output shape, filling columns
    the stale table did not have from the lens defaults."""
    cells = []
    for column in spec.columns:
        if column.name in values:
            cells.append(ColumnData(column.name, values[column.name]))
        elif column.name in defaults:
            cells.append(ColumnData(column.name, defaults[column.name]))
        else:
            return Outcome.failure(
                f"row key={key!r}: retained row lacks a value for column {column.name!r}"
            )
    return Outcome.success(RowData(tuple(cells)))


def _apply_table_data(
    lens: TableDataLens,
    l2r: bool,
    source: TableData,
    target: Optional[TableData],
) -> Outcome[TableData]:
    direction = Direction.LEFT_TO_RIGHT if l2r else Direction.RIGHT_TO_LEFT

    problem = _conformance_error(lens, source.spec, l2r, "source")
    if problem is None and target is not None:
        problem = _conformance_error(lens, target.spec, l2r, "target")
    if problem is not None:
        return Outcome.failure(problem)
    if source.key_column != lens.key_column:
        return Outcome.failure(
            f"source table keyed by {source.key_column!r}, lens expects {lens.key_column!r}"
        )
    if target is not None and target.key_column != lens.key_column:
        return Outcome.failure(
            f"target table keyed by {target.key_column!r}, lens expects {lens.key_column!r}"
        )

    spec_result = apply_table_lens(
        lens.structural, direction, source.spec, target.spec if target else None
    )
    if spec_result.is_failure:
        return Outcome.failure(spec_result.error)
    new_spec = spec_result.data
    if new_spec is None:
        return Outcome.failure("table lens yields no destination table")

    far_defaults = {}
    for data_lens in lens.column_data_lenses:
        structural = data_lens.structural
        far = structural.right if l2r else structural.left
        if far is not None and data_lens.kind in (LensKind.INSERT, LensKind.DELETE):
            far_defaults[far.name] = data_lens.default_value

    matched: Dict[object, RowData] = {}
    if target is not None:
        for row in target.rows:
            matched[target.key_of(row)] = row

    rows: List[RowData] = []
    consumed = set()
    for row in source.rows:
        key = source.key_of(row)
        target_row = matched.get(key)
        if target_row is not None:
            consumed.add(key)
        cells = _transform_row(
            lens,
            l2r,
            _cells_by_name(row),
            _cells_by_name(target_row) if target_row is not None else None,
            key,
        )
        if cells.is_failure:
            return Outcome.failure(cells.error)
        rows.append(RowData(tuple(cells.data)))
    if target is not None:
        for row in target.rows:
            key = target.key_of(row)
            if key in consumed:
                continue
            retained = _reorder_row(new_spec, _cells_by_name(row), far_defaults, key)
            if retained.is_failure:
                return Outcome.failure(retained.error)
            rows.append(retained.data)

    try:
        return Outcome.success(TableData(new_spec, tuple(rows), lens.key_column))
    except ValueError as exc:
        return Outcome.failure(str(exc))


def table_data_create_right(lens: TableDataLens, left: TableData) -> Outcome[TableData]:
    """Naive rightward transformation; any existing right data is ignored."""
    return _apply_table_data(lens, True, left, None)


def table_data_create_left(lens: TableDataLens, right: TableData) -> Outcome[TableData]:
    return _apply_table_data(lens, False, right, None)


def table_data_put_right(
    lens: TableDataLens, left: TableData, right: TableData
) -> Outcome[TableData]:
    """Update the right table from the left one, aligning rows by key.

    Matched rows are updated cell-wise, unmatched left rows are created,
    and right-only rows are retained unchanged, in that order.
    """
    return _apply_table_data(lens, True, left, right)


def table_data_put_left(
    lens: TableDataLens, right: TableData, left: TableData
) -> Outcome[TableData]:
    return _apply_table_data(lens, False, right, left)


def full_sync(
    lens: TableDataLens, left: TableData, right: TableData
) -> Outcome[Tuple[TableData, TableData]]:
    """Put right, then put left with the fresh right table.

    Afterwards both sides hold the union of the key sets and agree on the
    shared columns modulo the column value lenses; running the sync again
    changes nothing.
    """
    return table_data_put_right(lens, left, right).bind(
        lambda new_right: table_data_put_left(lens, new_right, left).map(
            lambda new_left: (new_left, new_right)
        )
    )
