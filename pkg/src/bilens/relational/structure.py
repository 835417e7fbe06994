"""Relational metamodel and structural lenses.

Tables are named, ordered lists of typed columns. Structural lenses map
one table shape to another: identity and rename connect a column across
both sides, delete records a left-only column, insert a right-only one,
and disconnect pairs two unrelated sides (or one side with nothing, which
is exactly what delete and insert are).

Applying a lens toward a side where the column is absent yields nothing;
applying it back materializes the column from the stale target when one is
available (put) or from the lens metadata (create). A table lens aggregates
column lenses in order: the output column order is the lens order, and
every input column must be covered by exactly one lens, so mapping gaps
fail instead of silently passing columns through.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence, Tuple

from ..core import SymmetricLens
from ..outcome import Outcome
from ..values import ValueKind

__all__ = [
    "ColumnType",
    "LensKind",
    "Direction",
    "ColumnSpec",
    "TableSpec",
    "ColumnSide",
    "ColumnLens",
    "TableLens",
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
]

# Column types share the primitive value vocabulary; UNIT marks deletion.
ColumnType = ValueKind


class LensKind(Enum):
    IDENTITY = "identity"
    RENAME = "rename"
    INSERT = "insert"
    DELETE = "delete"
    DISCONNECT = "disconnect"


class Direction(Enum):
    LEFT_TO_RIGHT = "left-to-right"
    RIGHT_TO_LEFT = "right-to-left"


@dataclass(frozen=True)
class ColumnSpec:
    name: str
    type: ColumnType

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("column name must be non-empty")
        if not isinstance(self.type, ValueKind):
            raise TypeError("column type must be a ColumnType")


@dataclass(frozen=True)
class TableSpec:
    name: str
    columns: Tuple[ColumnSpec, ...]

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("table name must be non-empty")
        object.__setattr__(self, "columns", tuple(self.columns))
        names = [c.name for c in self.columns]
        if len(names) != len(set(names)):
            raise ValueError(f"duplicate column names in table {self.name!r}")

    def column(self, name: str) -> Optional[ColumnSpec]:
        for col in self.columns:
            if col.name == name:
                return col
        return None


@dataclass(frozen=True)
class ColumnSide:
    """One side of a column lens: the column's name and type there."""

    name: str
    type: ColumnType


@dataclass(frozen=True)
class ColumnLens:
    """Structural lens over a single column. A side set to None means the
    column does not exist on that side."""

    kind: LensKind
    left: Optional[ColumnSide]
    right: Optional[ColumnSide]


def column_identity(name: str, type: ColumnType) -> ColumnLens:
    side = ColumnSide(name, type)
    return ColumnLens(LensKind.IDENTITY, side, side)


def column_rename(left_name: str, right_name: str, type: ColumnType) -> ColumnLens:
    return ColumnLens(LensKind.RENAME, ColumnSide(left_name, type), ColumnSide(right_name, type))


def column_insert(name: str, type: ColumnType) -> ColumnLens:
    return ColumnLens(LensKind.INSERT, None, ColumnSide(name, type))


def column_delete(name: str, type: ColumnType) -> ColumnLens:
    return ColumnLens(LensKind.DELETE, ColumnSide(name, type), None)


def column_disconnect(
    left: Optional[ColumnSide], right: Optional[ColumnSide]
) -> ColumnLens:
    if left is None and right is None:
        raise ValueError("disconnect needs a column on at least one side")
    return ColumnLens(LensKind.DISCONNECT, left, right)


def _near_far(lens: ColumnLens, direction: Direction) -> Tuple[Optional[ColumnSide], Optional[ColumnSide]]:
    if direction is Direction.LEFT_TO_RIGHT:
        return lens.left, lens.right
    return lens.right, lens.left


def apply_column_lens(
    lens: ColumnLens,
    direction: Direction,
    source: Optional[ColumnSpec],
    target: Optional[ColumnSpec] = None,
) -> Outcome[Optional[ColumnSpec]]:
    """Map a column across the lens.

    `source` is the column on the side the transformation starts from (or
    None when the lens has no column there), `target` the stale column on
    the destination side when putting, None when creating.
    """
    near, far = _near_far(lens, direction)

    if near is None:
        if source is not None:
            return Outcome.failure(
                f"column {source.name!r} should not exist on the source side of this lens"
            )
    else:
        if source is None:
            return Outcome.failure(f"missing source column {near.name!r}")
        if source.name != near.name:
            return Outcome.failure(
                f"column name mismatch: lens expects {near.name!r}, got {source.name!r}"
            )
        if source.type is not near.type:
            return Outcome.failure(
                f"column {near.name!r} type mismatch: lens expects {near.type.value}, "
                f"got {source.type.value}"
            )

    if far is None:
        return Outcome.success(None)

    # identity and rename carry the column across; insert, delete and
    # disconnect materialize the far side independently of the source,
    # preferring the stale target so puts keep its recorded shape.
    if lens.kind in (LensKind.IDENTITY, LensKind.RENAME):
        return Outcome.success(ColumnSpec(far.name, far.type))
    if target is not None:
        if target.name != far.name:
            return Outcome.failure(
                f"target column name mismatch: lens expects {far.name!r}, got {target.name!r}"
            )
        return Outcome.success(target)
    return Outcome.success(ColumnSpec(far.name, far.type))


def column_lens_as_symmetric(lens: ColumnLens) -> SymmetricLens:
    """View a column lens as a symmetric lens over optional columns."""
    return SymmetricLens(
        create_right=lambda x: apply_column_lens(lens, Direction.LEFT_TO_RIGHT, x, None),
        create_left=lambda y: apply_column_lens(lens, Direction.RIGHT_TO_LEFT, y, None),
        put_right=lambda x, y: apply_column_lens(lens, Direction.LEFT_TO_RIGHT, x, y),
        put_left=lambda y, x: apply_column_lens(lens, Direction.RIGHT_TO_LEFT, y, x),
    )


@dataclass(frozen=True)
class TableLens:
    """Structural lens over a whole table, aggregating column lenses."""

    kind: LensKind
    left_name: Optional[str]
    right_name: Optional[str]
    column_lenses: Tuple[ColumnLens, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "column_lenses", tuple(self.column_lenses))
        if self.kind in (LensKind.IDENTITY, LensKind.RENAME):
            if not self.left_name or not self.right_name:
                raise ValueError(f"{self.kind.value} table lens needs names on both sides")
            if not self.column_lenses:
                raise ValueError(f"{self.kind.value} table lens needs at least one column lens")
        elif self.kind is LensKind.DELETE:
            if not self.left_name or self.right_name is not None:
                raise ValueError("delete table lens exists on the left side only")
        elif self.kind is LensKind.INSERT:
            if not self.right_name or self.left_name is not None:
                raise ValueError("insert table lens exists on the right side only")
        else:
            raise ValueError("table lenses support identity, rename, insert and delete")
        for side_name in ("left", "right"):
            names = [
                getattr(l, side_name).name
                for l in self.column_lenses
                if getattr(l, side_name) is not None
            ]
            if len(names) != len(set(names)):
                raise ValueError(f"duplicate {side_name}-side column names in table lens")


def table_identity_lens(name: str, column_lenses: Sequence[ColumnLens]) -> TableLens:
    """Copy a table under the same name, transforming its columns."""
    return TableLens(LensKind.IDENTITY, name, name, tuple(column_lenses))


def table_rename_lens(
    left_name: str, right_name: str, column_lenses: Sequence[ColumnLens]
) -> TableLens:
    return TableLens(LensKind.RENAME, left_name, right_name, tuple(column_lenses))


def _index_columns(spec: TableSpec) -> Dict[str, ColumnSpec]:
    return {c.name: c for c in spec.columns}


def apply_table_lens(
    lens: TableLens,
    direction: Direction,
    source: Optional[TableSpec],
    target: Optional[TableSpec] = None,
) -> Outcome[Optional[TableSpec]]:
    """Map a table shape across the lens.

    For identity and rename, every source column must be claimed by exactly
    one column lens and every target column (when putting) must be known to
    some lens; a lens's target-side column may be absent, in which case the
    put materializes it.
    """
    l2r = direction is Direction.LEFT_TO_RIGHT
    near_name = lens.left_name if l2r else lens.right_name
    far_name = lens.right_name if l2r else lens.left_name

    if near_name is None:
        if source is not None:
            return Outcome.failure(
                f"table {source.name!r} should not exist on the source side of this lens"
            )
        if far_name is None:  # unreachable by construction
            return Outcome.success(None)
        if target is not None:
            if target.name != far_name:
                return Outcome.failure(
                    f"target table name mismatch: lens expects {far_name!r}, got {target.name!r}"
                )
            return Outcome.success(target)
        created = []
        for column_lens in lens.column_lenses:
            result = apply_column_lens(column_lens, direction, None, None)
            if result.is_failure:
                return Outcome.failure(result.error)
            if result.data is not None:
                created.append(result.data)
        return Outcome.success(TableSpec(far_name, tuple(created)))

    if source is None:
        return Outcome.failure(f"missing source table {near_name!r}")
    if source.name != near_name:
        return Outcome.failure(
            f"table name mismatch: lens expects {near_name!r}, got {source.name!r}"
        )
    if far_name is None:
        return Outcome.success(None)

    source_cols = _index_columns(source)
    claimed = set()
    target_cols: Dict[str, ColumnSpec] = {}
    if target is not None:
        if target.name != far_name:
            return Outcome.failure(
                f"target table name mismatch: lens expects {far_name!r}, got {target.name!r}"
            )
        target_cols = _index_columns(target)
        known_far = {
            (l.right if l2r else l.left).name
            for l in lens.column_lenses
            if (l.right if l2r else l.left) is not None
        }
        for name in target_cols:
            if name not in known_far:
                return Outcome.failure(f"uncovered column {name!r} in target table")

    output = []
    for column_lens in lens.column_lenses:
        near, far = _near_far(column_lens, direction)
        source_col = None
        if near is not None:
            source_col = source_cols.get(near.name)
            if source_col is None:
                return Outcome.failure(f"missing source column {near.name!r}")
            if near.name in claimed:
                return Outcome.failure(f"column {near.name!r} covered by more than one lens")
            claimed.add(near.name)
        target_col = target_cols.get(far.name) if far is not None else None
        result = apply_column_lens(column_lens, direction, source_col, target_col)
        if result.is_failure:
            return Outcome.failure(result.error)
        if result.data is not None:
            output.append(result.data)

    uncovered = set(source_cols) - claimed
    if uncovered:
        listed = ", ".join(repr(n) for n in sorted(uncovered))
        return Outcome.failure(f"uncovered source column(s): {listed}")

    try:
        return Outcome.success(TableSpec(far_name, tuple(output)))
    except ValueError as exc:
        return Outcome.failure(str(exc))


def table_lens_as_symmetric(lens: TableLens) -> SymmetricLens[TableSpec, TableSpec]:
    """View an identity or rename table lens as a symmetric lens over
    table shapes."""
    if lens.kind not in (LensKind.IDENTITY, LensKind.RENAME):
        raise ValueError("only identity and rename table lenses connect both sides")
    return SymmetricLens(
        create_right=lambda x: apply_table_lens(lens, Direction.LEFT_TO_RIGHT, x, None),
        create_left=lambda y: apply_table_lens(lens, Direction.RIGHT_TO_LEFT, y, None),
        put_right=lambda x, y: apply_table_lens(lens, Direction.LEFT_TO_RIGHT, x, y),
        put_left=lambda y, x: apply_table_lens(lens, Direction.RIGHT_TO_LEFT, y, x),
    )
