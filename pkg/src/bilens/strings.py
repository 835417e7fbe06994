"""String lenses built from id, ins and del atoms.

An id atom copies a regex-matched piece of text through unchanged in both
directions. An ins atom owns a constant that exists only on the right
side; del is its mirror. The concat combinator (also available as the `&`
operator) lays atoms side by side over a single string: the input is split
into consecutive segments, each consumed greedily by one atom's language
anchored at the current offset, with no backtracking across atom
boundaries. Ambiguous pipelines fail loudly rather than guessing.

Patterns use the standard `re` dialect, restricted: backreferences and
lookaround are rejected so matching stays deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .core import SymmetricLens
from .outcome import Outcome

__all__ = ["StringLensAtom", "StringLens", "id_lens", "ins_lens", "del_lens", "concat"]

_FORBIDDEN_CONSTRUCTS = ("(?=", "(?!", "(?<=", "(?<!", "(?P=")
_BACKREFERENCE = re.compile(r"\\[1-9]")


def _validate_pattern(pattern: str) -> None:
    for construct in _FORBIDDEN_CONSTRUCTS:
        if construct in pattern:
            raise ValueError(f"pattern {pattern!r} uses unsupported lookaround or backreference")
    if _BACKREFERENCE.search(pattern):
        raise ValueError(f"pattern {pattern!r} uses an unsupported backreference")
    try:
        re.compile(pattern)
    except re.error as exc:
        raise ValueError(f"pattern {pattern!r} does not compile: {exc}") from exc


@lru_cache(maxsize=None)
def _compiled(pattern: str) -> "re.Pattern[str]":
    return re.compile(pattern)


@dataclass(frozen=True)
class StringLensAtom:
    """One segment of a string pipeline: kind is 'id', 'ins' or 'del';
    pattern holds the regex for id and the constant for ins/del."""

    kind: str
    pattern: str

    def __post_init__(self) -> None:
        if self.kind not in ("id", "ins", "del"):
            raise ValueError(f"unknown atom kind {self.kind!r}")
        if self.kind == "id":
            _validate_pattern(self.pattern)

    def side_regex(self, left: bool) -> str:
        if self.kind == "id":
            return self.pattern
        if self.kind == "ins":
            return "" if left else re.escape(self.pattern)
        return re.escape(self.pattern) if left else ""

    def transform(self, segment: str, to_right: bool) -> str:
        if self.kind == "id":
            return segment
        if self.kind == "ins":
            return self.pattern if to_right else ""
        return "" if to_right else self.pattern


def _split(atoms: Sequence[StringLensAtom], text: str, left: bool) -> Outcome[Tuple[str, ...]]:
    segments = []
    offset = 0
    for index, atom in enumerate(atoms):
        match = _compiled(atom.side_regex(left)).match(text, offset)
        if match is None:
            side = "left" if left else "right"
            return Outcome.failure(
                f"lens {index} ({atom.kind} {atom.pattern!r}) does not match the {side} "
                f"input {text!r} at offset {offset}"
            )
        segments.append(match.group(0))
        offset = match.end()
    if offset != len(text):
        return Outcome.failure(
            f"unconsumed input {text[offset:]!r} at offset {offset} after {len(atoms)} lenses"
        )
    return Outcome.success(tuple(segments))


def _transform(atoms: Sequence[StringLensAtom], text: str, to_right: bool) -> Outcome[str]:
    if not isinstance(text, str):
        return Outcome.failure(f"expected a string, got {type(text).__name__}")
    return _split(atoms, text, left=to_right).map(
        lambda segments: "".join(
            atom.transform(segment, to_right) for atom, segment in zip(atoms, segments)
        )
    )


@dataclass(frozen=True)
class StringLens(SymmetricLens[str, str]):
    """A symmetric string lens carrying its atom pipeline, so `&` can
    concatenate lenses without re-deriving their languages."""

    atoms: Tuple[StringLensAtom, ...] = ()

    def __and__(self, other: "StringLens") -> "StringLens":
        return concat([self, other])

    def split_left(self, text: str) -> Outcome[Tuple[str, ...]]:
        """Split a left-side string into per-atom segments."""
        return _split(self.atoms, text, left=True)

    def split_right(self, text: str) -> Outcome[Tuple[str, ...]]:
        """Split a right-side string into per-atom segments."""
        return _split(self.atoms, text, left=False)


def _from_atoms(atoms: Iterable[StringLensAtom]) -> StringLens:
    pipeline = tuple(atoms)

    def rightwards(text: str, *_stale: str) -> Outcome[str]:
        return _transform(pipeline, text, to_right=True)

    def leftwards(text: str, *_stale: str) -> Outcome[str]:
        return _transform(pipeline, text, to_right=False)

    return StringLens(
        create_right=rightwards,
        create_left=leftwards,
        put_right=rightwards,
        put_left=leftwards,
        atoms=pipeline,
    )


def id_lens(pattern: str) -> StringLens:
    """Copy text matching `pattern` through unchanged in both directions."""
    return _from_atoms([StringLensAtom("id", pattern)])


def ins_lens(constant: str) -> StringLens:
    """Insert `constant` going right, remove it going left. The left
    language is the empty string, the right language exactly the constant."""
    return _from_atoms([StringLensAtom("ins", constant)])


def del_lens(constant: str) -> StringLens:
    """Remove `constant` going right, reinsert it going left; the mirror
    of :func:`ins_lens`."""
    return _from_atoms([StringLensAtom("del", constant)])


def concat(lenses: Sequence[StringLens]) -> StringLens:
    """Place string lenses sequentially over a single string.

    Nested concatenations flatten, so `a & b & c` splits into the atoms of
    all three regardless of grouping.
    """
    if not lenses:
        raise ValueError("concat requires at least one lens")
    atoms = []
    for lens in lenses:
        if not isinstance(lens, StringLens):
            raise TypeError("concat operates on string lenses only")
        atoms.extend(lens.atoms)
    return _from_atoms(atoms)
