"""Primitive value kinds and the lenses over them.

Values are plain Python objects: bool, int (64-bit signed range, with
`long` as a distinct nominal kind of the same width), decimal.Decimal
(exact, scale at most 10), naive second-precision datetime, str, and the
UNIT sentinel marking deleted data. Kind checks and the canonical text
renderings used by the file canonizers live here so every consumer agrees
on one grammar.
"""

from __future__ import annotations

import re
from datetime import datetime
from decimal import Decimal, localcontext
from enum import Enum
from typing import Callable, Optional

from .core import SymmetricLens
from .outcome import Outcome

__all__ = [
    "ValueKind",
    "UNIT",
    "INT64_MIN",
    "INT64_MAX",
    "check_value",
    "kind_of",
    "render_value",
    "parse_value",
    "identity_lens",
    "add_lens",
    "sub_lens",
    "decimal_add_lens",
    "decimal_sub_lens",
    "int_string_lens",
    "string_datetime_lens",
    "day_of_month_lens",
]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

MAX_DECIMAL_SCALE = 10

_INT_GRAMMAR = re.compile(r"-?(0|[1-9][0-9]*)")
_DECIMAL_GRAMMAR = re.compile(r"-?[0-9]+(\.[0-9]+)?")
_DATETIME_GRAMMAR = re.compile(r"[0-9]{4}-[0-9]{2}-[0-9]{2}T[0-9]{2}:[0-9]{2}:[0-9]{2}")
_DATETIME_FORMAT = "%Y-%m-%dT%H:%M:%S"


class ValueKind(Enum):
    """The supported primitive kinds; UNIT marks deleted data."""

    BOOLEAN = "boolean"
    INTEGER = "integer"
    LONG = "long"
    DECIMAL = "decimal"
    DATETIME = "datetime"
    STRING = "string"
    UNIT = "unit"


class _Unit:
    """Singleton payload of the UNIT kind."""

    _instance: Optional["_Unit"] = None

    def __new__(cls) -> "_Unit":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNIT"


UNIT = _Unit()


def _decimal_scale(value: Decimal) -> int:
    exponent = value.as_tuple().exponent
    return -exponent if isinstance(exponent, int) and exponent < 0 else 0


def check_value(value: object, kind: ValueKind) -> Optional[str]:
    """Return an error message when `value` does not inhabit `kind`,
    else None. Booleans are checked before integers since bool is an int
    subtype in Python."""
    if kind is ValueKind.BOOLEAN:
        if not isinstance(value, bool):
            return f"expected a boolean, got {type(value).__name__}"
    elif kind in (ValueKind.INTEGER, ValueKind.LONG):
        if isinstance(value, bool) or not isinstance(value, int):
            return f"expected an integer, got {type(value).__name__}"
        if not INT64_MIN <= value <= INT64_MAX:
            return f"integer {value} outside the 64-bit signed range"
    elif kind is ValueKind.DECIMAL:
        if not isinstance(value, Decimal):
            return f"expected a decimal, got {type(value).__name__}"
        if not value.is_finite():
            return f"decimal {value} is not finite"
        if _decimal_scale(value) > MAX_DECIMAL_SCALE:
            return f"decimal {value} exceeds scale {MAX_DECIMAL_SCALE}"
    elif kind is ValueKind.DATETIME:
        if not isinstance(value, datetime):
            return f"expected a datetime, got {type(value).__name__}"
        if value.tzinfo is not None:
            return "datetime must be timezone-naive"
        if value.microsecond != 0:
            return "datetime must have second precision"
    elif kind is ValueKind.STRING:
        if not isinstance(value, str):
            return f"expected a string, got {type(value).__name__}"
    elif kind is ValueKind.UNIT:
        if value is not UNIT:
            return f"expected UNIT, got {type(value).__name__}"
    return None


def kind_of(value: object) -> Optional[ValueKind]:
    """Infer the kind of a runtime value; LONG is never inferred since it
    shares the integer representation."""
    if isinstance(value, bool):
        return ValueKind.BOOLEAN
    if isinstance(value, int):
        return ValueKind.INTEGER
    if isinstance(value, Decimal):
        return ValueKind.DECIMAL
    if isinstance(value, datetime):
        return ValueKind.DATETIME
    if isinstance(value, str):
        return ValueKind.STRING
    if value is UNIT:
        return ValueKind.UNIT
    return None


def render_value(kind: ValueKind, value: object) -> str:
    """Render a kind-checked value in the canonical text form: base-10
    integers, '.'-separated decimals without exponents, 'true'/'false',
    ISO 'YYYY-MM-DDThh:mm:ss' datetimes, strings verbatim."""
    problem = check_value(value, kind)
    if problem is not None:
        raise ValueError(problem)
    if kind is ValueKind.BOOLEAN:
        return "true" if value else "false"
    if kind in (ValueKind.INTEGER, ValueKind.LONG):
        return str(value)
    if kind is ValueKind.DECIMAL:
        return str(value)
    if kind is ValueKind.DATETIME:
        return value.isoformat(timespec="seconds")  # type: ignore[union-attr]
    if kind is ValueKind.STRING:
        return value  # type: ignore[return-value]
    raise ValueError(f"kind {kind.value} has no text rendering")


def parse_value(kind: ValueKind, text: str) -> Outcome[object]:
    """Parse the canonical text form back into a value."""
    if kind in (ValueKind.INTEGER, ValueKind.LONG):
        return _parse_int(text)
    if kind is ValueKind.DECIMAL:
        return _parse_decimal(text)
    if kind is ValueKind.BOOLEAN:
        if text == "true":
            return Outcome.success(True)
        if text == "false":
            return Outcome.success(False)
        return Outcome.failure(f"cannot parse {text!r} as a boolean")
    if kind is ValueKind.DATETIME:
        return _parse_datetime(text)
    if kind is ValueKind.STRING:
        return Outcome.success(text)
    return Outcome.failure(f"kind {kind.value} has no text form")


def _parse_int(text: str) -> Outcome[object]:
    if _INT_GRAMMAR.fullmatch(text) is None:
        return Outcome.failure(f"cannot parse {text!r} as an integer")
    value = int(text)
    if not INT64_MIN <= value <= INT64_MAX:
        return Outcome.failure(f"integer {text!r} outside the 64-bit signed range")
    return Outcome.success(value)


def _parse_decimal(text: str) -> Outcome[object]:
    if _DECIMAL_GRAMMAR.fullmatch(text) is None:
        return Outcome.failure(f"cannot parse {text!r} as a decimal")
    value = Decimal(text)
    if _decimal_scale(value) > MAX_DECIMAL_SCALE:
        return Outcome.failure(f"decimal {text!r} exceeds scale {MAX_DECIMAL_SCALE}")
    return Outcome.success(value)


def _parse_datetime(text: str) -> Outcome[object]:
    if _DATETIME_GRAMMAR.fullmatch(text) is None:
        return Outcome.failure(f"cannot parse {text!r} as a datetime")
    try:
        return Outcome.success(datetime.strptime(text, _DATETIME_FORMAT))
    except ValueError as exc:
        return Outcome.failure(f"cannot parse {text!r} as a datetime: {exc}")


def _checked(kind: ValueKind, value: object) -> Outcome[object]:
    problem = check_value(value, kind)
    if problem is not None:
        return Outcome.failure(problem)
    return Outcome.success(value)


def identity_lens(kind: ValueKind) -> SymmetricLens:
    """Identity over one primitive kind; values of any other kind fail."""

    def through(value: object, *_stale: object) -> Outcome[object]:
        return _checked(kind, value)

    return SymmetricLens(
        create_right=through,
        create_left=through,
        put_right=through,
        put_left=through,
    )


def add_lens(k: int) -> SymmetricLens:
    """Shift integers by k rightwards and by -k leftwards. Results leaving
    the 64-bit signed range are an error, never a wrap-around."""

    def shift(delta: int) -> Callable[..., Outcome[object]]:
        def go(value: object, *_stale: object) -> Outcome[object]:
            return _checked(ValueKind.INTEGER, value).bind(
                lambda v: _bounded(v + delta)  # type: ignore[operator]
            )

        return go

    def _bounded(result: int) -> Outcome[object]:
        if not INT64_MIN <= result <= INT64_MAX:
            return Outcome.failure(f"integer overflow: {result} outside the 64-bit signed range")
        return Outcome.success(result)

    return SymmetricLens(
        create_right=shift(k),
        create_left=shift(-k),
        put_right=shift(k),
        put_left=shift(-k),
    )


def sub_lens(k: int) -> SymmetricLens:
    """Shift integers by -k rightwards; the mirror of :func:`add_lens`."""
    return add_lens(-k)


def decimal_add_lens(k: Decimal) -> SymmetricLens:
    """Shift decimals by k rightwards and by -k leftwards, exactly."""
    if not isinstance(k, Decimal):
        raise TypeError("decimal lens offset must be a Decimal")

    def shift(delta: Decimal) -> Callable[..., Outcome[object]]:
        def go(value: object, *_stale: object) -> Outcome[object]:
            def add(v: object) -> Outcome[object]:
                # plenty of precision so the sum is exact, not rounded
                with localcontext() as ctx:
                    ctx.prec = 60
                    return _checked(ValueKind.DECIMAL, v + delta)  # type: ignore[operator]

            return _checked(ValueKind.DECIMAL, value).bind(add)

        return go

    return SymmetricLens(
        create_right=shift(k),
        create_left=shift(-k),
        put_right=shift(k),
        put_left=shift(-k),
    )


def decimal_sub_lens(k: Decimal) -> SymmetricLens:
    return decimal_add_lens(-k)


def int_string_lens() -> SymmetricLens:
    """Cross-type lens rendering integers as base-10 text and parsing the
    same grammar back (optional leading '-', no leading zeros)."""

    def render(value: object, *_stale: object) -> Outcome[object]:
        return _checked(ValueKind.INTEGER, value).map(lambda v: render_value(ValueKind.INTEGER, v))

    def parse(text: object, *_stale: object) -> Outcome[object]:
        return _checked(ValueKind.STRING, text).bind(
            lambda s: parse_value(ValueKind.INTEGER, s)  # type: ignore[arg-type]
        )

    return SymmetricLens(
        create_right=render,
        create_left=parse,
        put_right=render,
        put_left=parse,
    )


def string_datetime_lens() -> SymmetricLens:
    """Cross-type lens between ISO 'YYYY-MM-DDThh:mm:ss' text on the left
    and datetime values on the right."""

    def parse(text: object, *_stale: object) -> Outcome[object]:
        return _checked(ValueKind.STRING, text).bind(
            lambda s: parse_value(ValueKind.DATETIME, s)  # type: ignore[arg-type]
        )

    def render(value: object, *_stale: object) -> Outcome[object]:
        return _checked(ValueKind.DATETIME, value).map(
            lambda v: render_value(ValueKind.DATETIME, v)
        )

    return SymmetricLens(
        create_right=parse,
        create_left=render,
        put_right=parse,
        put_left=render,
    )


def day_of_month_lens(default_base: datetime) -> SymmetricLens:
    """Project a datetime to its day of month; going left replaces the day
    component, either of the stale datetime (put) or of `default_base`
    (create). Days invalid for the target month are an error."""
    problem = check_value(default_base, ValueKind.DATETIME)
    if problem is not None:
        raise ValueError(f"default base datetime: {problem}")

    def project(value: object, *_stale: object) -> Outcome[object]:
        return _checked(ValueKind.DATETIME, value).map(lambda v: v.day)  # type: ignore[union-attr]

    def _replace_day(base: datetime, day: int) -> Outcome[object]:
        try:
            return Outcome.success(base.replace(day=day))
        except ValueError:
            return Outcome.failure(
                f"day {day} is not valid for {base.year:04d}-{base.month:02d}"
            )

    def put_left(day: object, stale: object) -> Outcome[object]:
        return _checked(ValueKind.INTEGER, day).bind(
            lambda d: _checked(ValueKind.DATETIME, stale).bind(
                lambda base: _replace_day(base, d)  # type: ignore[arg-type]
            )
        )

    def create_left(day: object) -> Outcome[object]:
        return _checked(ValueKind.INTEGER, day).bind(
            lambda d: _replace_day(default_base, d)  # type: ignore[arg-type]
        )

    return SymmetricLens(
        create_right=project,
        create_left=create_left,
        put_right=project,
        put_left=put_left,
    )
