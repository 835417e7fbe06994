"""Relational metamodel and the structural and data lenses over it."""

from .structure import (
    ColumnType,
    ColumnSpec,
    TableSpec,
    ColumnSide,
    ColumnLens,
    TableLens,
    LensKind,
    Direction,
    column_identity,
    column_rename,
    column_insert,
    column_delete,
    column_disconnect,
    apply_column_lens,
    apply_table_lens,
    column_lens_as_symmetric,
    table_lens_as_symmetric,
    table_identity_lens,
    table_rename_lens,
)
from .data import (
    ColumnData,
    RowData,
    TableData,
    ColumnDataLens,
    TableDataLens,
    data_identity,
    data_rename,
    data_insert,
    data_delete,
    data_disconnect,
    validate_column_data_lens,
    make_table_data_lens,
    table_data_create_right,
    table_data_create_left,
    table_data_put_right,
    table_data_put_left,
    full_sync,
)

__all__ = [
    "ColumnType",
    "ColumnSpec",
    "TableSpec",
    "ColumnSide",
    "ColumnLens",
    "TableLens",
    "LensKind",
    "Direction",
    "column_identity",
    "column_rename",
    "column_insert",
    "column_delete",
    "column_disconnect",
    "apply_column_lens",
    "apply_table_lens",
    "column_lens_as_symmetric",
    "table_lens_as_symmetric",
    "table_identity_lens",
    "table_rename_lens",
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
