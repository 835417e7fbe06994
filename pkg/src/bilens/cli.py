"""Command line synchronization of two tabular files through a lens.

`sync` loads both sides with the chosen canonizers, builds the table data
lens from a mapping file, runs one of the create/put/full-sync modes, and
writes the requested outputs. Output files are written to a temporary
sibling and renamed into place only when everything succeeded, so a failed
run never leaves partial output. `validate` checks a mapping without
touching any data.

Exit codes: 0 success, 2 validation errors, 3 data errors, 4 I/O errors.
Diagnostics go to standard error; a successful sync prints nothing.
"""

from __future__ import annotations

import os
import sys
import tempfile
from typing import Optional, Tuple

import click

from .canonize import CANONIZERS
from .mapping import build_lens, load_mapping
from .outcome import Outcome
from .relational.data import (
    TableData,
    full_sync,
    table_data_create_left,
    table_data_create_right,
    table_data_put_left,
    table_data_put_right,
    validate_column_data_lens,
)

EXIT_VALIDATION = 2
EXIT_DATA = 3
EXIT_IO = 4

_FORMATS = click.Choice(["csv", "json"])
_MODES = click.Choice(["create-right", "create-left", "put-right", "put-left", "full-sync"])


class _Abort(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _fail(code: int, message: str) -> "_Abort":
    return _Abort(code, message)


def _is_io_error(message: str) -> bool:
    return message.startswith("cannot read") or message.startswith("cannot write")


def _unwrap(outcome: Outcome, code: int):
    if outcome.is_failure:
        raise _fail(EXIT_IO if _is_io_error(outcome.error) else code, outcome.error)
    return outcome.data


def _load_side(path: str, fmt: str, table: str, key: str) -> TableData:
    return _unwrap(CANONIZERS[fmt].load(path, table, key), EXIT_DATA)


def _write_atomically(pairs) -> None:
    """Write every (data, fmt, destination) to a temp file first, then
    rename all of them, so either every output appears or none does."""
    staged: list[Tuple[str, str]] = []
    try:
        for data, fmt, destination in pairs:
            directory = os.path.dirname(os.path.abspath(destination)) or "."
            handle, temp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
            os.close(handle)
            staged.append((temp_path, destination))
            _unwrap(CANONIZERS[fmt].store(data, temp_path), EXIT_IO)
        for temp_path, destination in staged:
            os.replace(temp_path, destination)
    except _Abort:
        for temp_path, _ in staged:
            if os.path.exists(temp_path):
                os.unlink(temp_path)
        raise
    except OSError as exc:
        for temp_path, _ in staged:
            if os.path.exists(temp_path):
                os.unlink(temp_path)
        raise _fail(EXIT_IO, f"cannot write output: {exc}")


@click.group()
def main() -> None:
    """Synchronize two structurally heterogeneous tabular datasets."""


@main.command()
@click.option("--left", "left_path", required=True, help="Left input file.")
@click.option("--right", "right_path", required=True, help="Right input file.")
@click.option("--left-format", type=_FORMATS, default="csv", show_default=True)
@click.option("--right-format", type=_FORMATS, default="csv", show_default=True)
@click.option("--mapping", "mapping_path", required=True, help="Column mapping JSON file.")
@click.option("--mode", type=_MODES, required=True)
@click.option("--out-left", "out_left", default=None, help="Updated left output file.")
@click.option("--out-right", "out_right", default=None, help="Updated right output file.")
def sync(
    left_path: str,
    right_path: str,
    left_format: str,
    right_format: str,
    mapping_path: str,
    mode: str,
    out_left: Optional[str],
    out_right: Optional[str],
) -> None:
    """Run one synchronization mode over the two input files."""
    try:
        needs_left_out = mode in ("create-left", "put-left", "full-sync")
        needs_right_out = mode in ("create-right", "put-right", "full-sync")
        if needs_left_out and out_left is None:
            raise _fail(EXIT_VALIDATION, f"mode {mode} requires --out-left")
        if needs_right_out and out_right is None:
            raise _fail(EXIT_VALIDATION, f"mode {mode} requires --out-right")

        config = _unwrap(load_mapping(mapping_path), EXIT_VALIDATION)
        lens = _unwrap(build_lens(config), EXIT_VALIDATION)
        left = _load_side(left_path, left_format, config.left_table, config.key)
        right = _load_side(right_path, right_format, config.right_table, config.key)

        outputs = []
        if mode == "create-right":
            outputs.append((_unwrap(table_data_create_right(lens, left), EXIT_DATA), right_format, out_right))
        elif mode == "create-left":
            outputs.append((_unwrap(table_data_create_left(lens, right), EXIT_DATA), left_format, out_left))
        elif mode == "put-right":
            outputs.append((_unwrap(table_data_put_right(lens, left, right), EXIT_DATA), right_format, out_right))
        elif mode == "put-left":
            outputs.append((_unwrap(table_data_put_left(lens, right, left), EXIT_DATA), left_format, out_left))
        else:
            new_left, new_right = _unwrap(full_sync(lens, left, right), EXIT_DATA)
            outputs.append((new_left, left_format, out_left))
            outputs.append((new_right, right_format, out_right))
        _write_atomically(outputs)
    except _Abort as abort:
        click.echo(f"error: {abort}", err=True)
        sys.exit(abort.code)


@main.command()
@click.option("--mapping", "mapping_path", required=True, help="Column mapping JSON file.")
def validate(mapping_path: str) -> None:
    """Check a mapping file and report a verdict per column."""
    try:
        config = _unwrap(load_mapping(mapping_path), EXIT_VALIDATION)
    except _Abort as abort:
        click.echo(f"error: {abort}", err=True)
        sys.exit(abort.code)

    from .mapping import _column_lenses  # single source of lens construction

    ok = True
    for column in config.columns:
        _, data_lens = _column_lenses(column)
        verdict = validate_column_data_lens(data_lens)
        if verdict.is_success:
            click.echo(f"{column.kind} {column.label()}:{column.type.value} ... ok")
        else:
            ok = False
            click.echo(f"{column.kind} {column.label()}:{column.type.value} ... {verdict.error}")
    built = build_lens(config)
    if built.is_failure:
        ok = False
        click.echo(f"mapping ... {built.error}")
    else:
        click.echo(f"mapping ... ok ({len(config.columns)} columns, key {config.key!r})")
    if not ok:
        sys.exit(EXIT_VALIDATION)


if __name__ == "__main__":
    main()
