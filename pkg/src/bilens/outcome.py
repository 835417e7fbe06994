"""Success-or-error carrier used by every lens function.

An :class:`Outcome` holds either result data or a human-readable error
message, never both. Chaining transformations with :meth:`Outcome.bind`
stops at the first failure, which keeps lens pipelines linear instead of
exception-driven.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Generic, Optional, TypeVar

T = TypeVar("T")
U = TypeVar("U")

__all__ = ["Outcome", "success", "failure"]


@dataclass(frozen=True)
class Outcome(Generic[T]):
    """Either a success wrapping data or a failure wrapping a message.

    Use the :meth:`success` / :meth:`failure` constructors rather than
    calling the class directly. The message, when present, is the
    discriminator: a failure never exposes data and a success never
    exposes an error.
    """

    _data: Optional[T]
    _message: Optional[str]

    def __post_init__(self) -> None:
        if self._message is not None and not isinstance(self._message, str):
            raise TypeError("failure message must be a string")

    @classmethod
    def success(cls, data: T) -> "Outcome[T]":
        return cls(data, None)

    @classmethod
    def failure(cls, message: str) -> "Outcome[T]":
        return cls(None, message)

    @property
    def is_success(self) -> bool:
        return self._message is None

    @property
    def is_failure(self) -> bool:
        return self._message is not None

    @property
    def data(self) -> T:
        """The wrapped value. Raises on a failure outcome."""
        if self._message is not None:
            raise ValueError(f"no data on a failure outcome: {self._message}")
        return self._data  # type: ignore[return-value]

    @property
    def error(self) -> str:
        """The error message. Raises on a success outcome."""
        if self._message is None:
            raise ValueError("no error on a success outcome")
        return self._message

    def bind(self, f: Callable[[T], "Outcome[U]"]) -> "Outcome[U]":
        """Apply `f` to the data if successful, else propagate the failure.

        `f` must itself return an Outcome. A failure short-circuits; the
        continuation is never invoked.
        """
        if self._message is not None:
            return Outcome(None, self._message)
        result = f(self._data)  # type: ignore[arg-type]
        if not isinstance(result, Outcome):
            raise TypeError("bind continuation must return an Outcome")
        return result

    def map(self, f: Callable[[T], U]) -> "Outcome[U]":
        """Apply a plain function to the data, keeping failures untouched."""
        return self.bind(lambda value: Outcome.success(f(value)))

    def map_error(self, f: Callable[[str], str]) -> "Outcome[T]":
        """Rewrite the error message, keeping successes untouched."""
        if self._message is None:
            return self
        return Outcome(None, f(self._message))

    def match(self, on_success: Callable[[T], U], on_failure: Callable[[str], U]) -> U:
        """Collapse the outcome by handling both branches."""
        if self._message is None:
            return on_success(self._data)  # type: ignore[arg-type]
        return on_failure(self._message)

    def __repr__(self) -> str:
        if self._message is None:
            return f"success({self._data!r})"
        return f"failure({self._message!r})"


def success(data: T) -> Outcome[T]:
    """Shorthand for :meth:`Outcome.success`."""
    return Outcome.success(data)


def failure(message: str) -> Outcome[T]:
    """Shorthand for :meth:`Outcome.failure`."""
    return Outcome.failure(message)
