"""Symmetric and asymmetric lens interfaces and generic combinators.

A symmetric lens keeps two structures X and Y consistent through four
functions: `create_right` builds a Y from an X alone, `create_left` the
reverse, and `put_right` / `put_left` propagate an updated value while
consulting the stale value on the other side. Every function returns an
:class:`~bilens.outcome.Outcome`, so partial transformations fail with a
message instead of raising.

Well-behaved lenses satisfy four round-tripping laws (create then put back
restores the original, in both directions, and likewise for put then put
back). The laws are not enforced by construction; the harness in
:mod:`bilens.laws` checks them on concrete fixtures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

from .outcome import Outcome

X = TypeVar("X")
Y = TypeVar("Y")
Z = TypeVar("Z")
S = TypeVar("S")
V = TypeVar("V")
L = TypeVar("L")
R = TypeVar("R")
T = TypeVar("T")

__all__ = [
    "SymmetricLens",
    "AsymmetricLens",
    "EitherValue",
    "asym_to_sym",
    "compose",
    "or_combinator",
    "join_either",
    "invert",
]


@dataclass(frozen=True)
class SymmetricLens(Generic[X, Y]):
    """The four-function transformation object between X and Y.

    Lenses are immutable values; combinators build new lenses and never
    mutate their operands. `lens1 >> lens2` composes sequentially.
    """

    create_right: Callable[[X], Outcome[Y]]
    create_left: Callable[[Y], Outcome[X]]
    put_right: Callable[[X, Y], Outcome[Y]]
    put_left: Callable[[Y, X], Outcome[X]]

    def __rshift__(self, other: "SymmetricLens") -> "SymmetricLens":
        return compose(self, other)


@dataclass(frozen=True)
class AsymmetricLens(Generic[S, V]):
    """A source-to-view lens: `get` projects, `put` writes a view back
    into a source, `create` builds a source from a view alone."""

    get: Callable[[S], Outcome[V]]
    put: Callable[[V, S], Outcome[S]]
    create: Callable[[V], Outcome[S]]


@dataclass(frozen=True)
class EitherValue(Generic[L, R]):
    """Tagged left-or-right carrier routed by the Or combinator."""

    tag: str
    value: object

    def __post_init__(self) -> None:
        if self.tag not in ("left", "right"):
            raise ValueError(f"tag must be 'left' or 'right', got {self.tag!r}")

    @classmethod
    def left(cls, value: L) -> "EitherValue[L, R]":
        return cls("left", value)

    @classmethod
    def right(cls, value: R) -> "EitherValue[L, R]":
        return cls("right", value)

    @property
    def is_left(self) -> bool:
        return self.tag == "left"


def join_either(v: EitherValue[T, T]) -> T:
    """Erase the tag of an either whose branches share one type."""
    if not isinstance(v, EitherValue):
        raise TypeError(f"expected an EitherValue, got {type(v).__name__}")
    return v.value  # type: ignore[return-value]


def asym_to_sym(lens: AsymmetricLens[S, V]) -> SymmetricLens[S, V]:
    """Embed an asymmetric lens as a symmetric one.

    The embedding maps create_left to `create`, create_right to `get`,
    put_left to `put`, and put_right to `get` of the updated source (the
    stale view is ignored, since the source side carries all information).
    """
    return SymmetricLens(
        create_right=lens.get,
        create_left=lens.create,
        put_right=lambda x, _y: lens.get(x),
        put_left=lens.put,
    )


def compose(first: SymmetricLens[X, Y], second: SymmetricLens[Y, Z]) -> SymmetricLens[X, Z]:
    """Sequential composition: the right type of `first` feeds `second`.

    Creates chain directly. Puts recover the unobserved middle value from
    the side being consulted: put_right rebuilds it with `second.create_left`
    of the stale far value, put_left with `first.create_right`. The first
    failing stage short-circuits.
    """

    def create_right(x: X) -> Outcome[Z]:
        return first.create_right(x).bind(second.create_right)

    def create_left(z: Z) -> Outcome[X]:
        return second.create_left(z).bind(first.create_left)

    def put_right(x: X, z: Z) -> Outcome[Z]:
        return (
            second.create_left(z)
            .bind(lambda middle: first.put_right(x, middle))
            .bind(lambda updated: second.put_right(updated, z))
        )

    def put_left(z: Z, x: X) -> Outcome[X]:
        return (
            first.create_right(x)
            .bind(lambda middle: second.put_left(z, middle))
            .bind(lambda updated: first.put_left(updated, x))
        )

    return SymmetricLens(create_right, create_left, put_right, put_left)


def or_combinator(
    on_left: SymmetricLens, on_right: SymmetricLens
) -> SymmetricLens[EitherValue, EitherValue]:
    """Route left-tagged values through `on_left`, right-tagged through
    `on_right`, preserving the tag.

    When a put sees mismatched tags on its two arguments, the stale
    opposite-branch value is useless; the update falls back to create
    semantics on the updated side's branch.
    """

    def _expect_either(v: object) -> Outcome[EitherValue]:
        if isinstance(v, EitherValue):
            return Outcome.success(v)
        return Outcome.failure(f"expected an either value, got {type(v).__name__}")

    def _create(v: EitherValue, rightwards: bool) -> Outcome[EitherValue]:
        lens = on_left if v.is_left else on_right
        func = lens.create_right if rightwards else lens.create_left
        retag = EitherValue.left if v.is_left else EitherValue.right
        return func(v.value).map(retag)

    def create_right(x: EitherValue) -> Outcome[EitherValue]:
        return _expect_either(x).bind(lambda v: _create(v, rightwards=True))

    def create_left(y: EitherValue) -> Outcome[EitherValue]:
        return _expect_either(y).bind(lambda v: _create(v, rightwards=False))

    def _put(updated: EitherValue, stale: EitherValue, rightwards: bool) -> Outcome[EitherValue]:
        if updated.tag != stale.tag:
            return _create(updated, rightwards)
        lens = on_left if updated.is_left else on_right
        func = lens.put_right if rightwards else lens.put_left
        retag = EitherValue.left if updated.is_left else EitherValue.right
        return func(updated.value, stale.value).map(retag)

    def put_right(x: EitherValue, y: EitherValue) -> Outcome[EitherValue]:
        return _expect_either(x).bind(
            lambda vx: _expect_either(y).bind(lambda vy: _put(vx, vy, rightwards=True))
        )

    def put_left(y: EitherValue, x: EitherValue) -> Outcome[EitherValue]:
        return _expect_either(y).bind(
            lambda vy: _expect_either(x).bind(lambda vx: _put(vy, vx, rightwards=False))
        )

    return SymmetricLens(create_right, create_left, put_right, put_left)


def invert(lens: SymmetricLens[X, Y]) -> SymmetricLens[Y, X]:
    """Swap the sides of a lens; double inversion restores the original
    behavior on every input."""
    return SymmetricLens(
        create_right=lens.create_left,
        create_left=lens.create_right,
        put_right=lens.put_left,
        put_left=lens.put_right,
    )
