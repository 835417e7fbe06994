"""Round-tripping law checks for lenses.

The harness is lens-agnostic: it evaluates the law expressions against the
observable behavior of the four functions and reports verdicts. A failed
law is a verdict carrying the concrete counterexample, never a raised
error, so suites can aggregate results.

Checked laws, by name:

* CreatePutRL: create_right then put_left restores the left value.
* CreatePutLR: create_left then put_right restores the right value.
* PutRL: put_right then put_left restores the left value.
* PutLR: put_left then put_right restores the right value.
* PutPutRight / PutPutLeft: putting twice equals putting once.

Asymmetric lenses have their own quartet: PutGet, GetPut, CreateGet and
PutTwice.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Generic, Optional, Tuple, TypeVar

from .core import AsymmetricLens, SymmetricLens
from .outcome import Outcome

X = TypeVar("X")
Y = TypeVar("Y")

__all__ = [
    "LensFixture",
    "Witness",
    "Verdict",
    "LawReport",
    "check_create_put_rl",
    "check_create_put_lr",
    "check_put_rl",
    "check_put_lr",
    "check_put_put",
    "check_update_round_trip",
    "check_asymmetric_laws",
    "symmetric_law_report",
    "randomized_suite",
]

@dataclass(frozen=True)
class LensFixture(Generic[X, Y]):
    """Developer-supplied test data for one lens.

    The update tuples describe expected round-tripping data: for a
    right-side update, (original source, expected original target, updated
    target, expected updated source) with the source on the left; the
    left-side tuple mirrors this with the source on the right.
    """

    default_left: X
    default_right: Y
    right_update: Optional[Tuple[X, Y, Y, X]] = None
    left_update: Optional[Tuple[Y, X, X, Y]] = None


@dataclass(frozen=True)
class Witness:
    """Concrete counterexample: the inputs fed in, what the law expected,
    and what actually came out."""

    inputs: Tuple
    expected: object
    actual: object

    def __str__(self) -> str:
        return f"inputs={self.inputs!r} expected={self.expected!r} actual={self.actual!r}"


@dataclass(frozen=True)
class Verdict:
    law: str
    passed: bool
    witness: Optional[Witness] = None

    def __str__(self) -> str:
        if self.passed:
            return f"{self.law}: pass"
        return f"{self.law}: FAIL ({self.witness})"


@dataclass(frozen=True)
class LawReport:
    """Aggregated verdicts, one per law, plus the seed when inputs were
    generated."""

    verdicts: Tuple[Verdict, ...]
    seed: Optional[int] = None
    cases: int = 1

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def failures(self) -> Tuple[Verdict, ...]:
        return tuple(v for v in self.verdicts if not v.passed)

    def __str__(self) -> str:
        origin = f" (seed={self.seed}, cases={self.cases})" if self.seed is not None else ""
        lines = [str(v) for v in self.verdicts]
        return "\n".join(lines) + origin


def _verdict(law: str, inputs: Tuple, expected: object, actual: object) -> Verdict:
    if actual == expected:
        return Verdict(law, True)
    return Verdict(law, False, Witness(inputs, expected, actual))


def check_create_put_rl(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    """create_right(x) bound into put_left(y, x) must return x."""
    x = fixture.default_left
    actual = lens.create_right(x).bind(lambda y: lens.put_left(y, x))
    return _verdict("CreatePutRL", (x,), Outcome.success(x), actual)


def check_create_put_lr(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    """create_left(y) bound into put_right(x, y) must return y."""
    y = fixture.default_right
    actual = lens.create_left(y).bind(lambda x: lens.put_right(x, y))
    return _verdict("CreatePutLR", (y,), Outcome.success(y), actual)


def check_put_rl(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    """put_right(x, y) bound into put_left(y', x) must return x."""
    x, y = fixture.default_left, fixture.default_right
    actual = lens.put_right(x, y).bind(lambda updated: lens.put_left(updated, x))
    return _verdict("PutRL", (x, y), Outcome.success(x), actual)


def check_put_lr(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    """put_left(y, x) bound into put_right(x', y) must return y."""
    x, y = fixture.default_left, fixture.default_right
    actual = lens.put_left(y, x).bind(lambda updated: lens.put_right(updated, y))
    return _verdict("PutLR", (x, y), Outcome.success(y), actual)


def _check_put_put_right(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    x, y = fixture.default_left, fixture.default_right
    once = lens.put_right(x, y)
    if once.is_failure:
        return Verdict("PutPutRight", True)
    twice = lens.put_right(x, once.data)
    return _verdict("PutPutRight", (x, y), once, twice)


def _check_put_put_left(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    x, y = fixture.default_left, fixture.default_right
    once = lens.put_left(y, x)
    if once.is_failure:
        return Verdict("PutPutLeft", True)
    twice = lens.put_left(y, once.data)
    return _verdict("PutPutLeft", (x, y), once, twice)


def check_put_put(
    lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]
) -> Tuple[Verdict, Verdict]:
    """Putting the same value twice must equal putting it once, checked in
    both directions. Vacuously true when the first put fails."""
    return _check_put_put_right(lens, fixture), _check_put_put_left(lens, fixture)


def check_update_round_trip(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> Verdict:
    """Check the expected round-tripping data for updates on both sides."""
    law = "UpdateRoundTrip"
    if fixture.right_update is not None:
        source, target, updated_target, updated_source = fixture.right_update
        created = lens.create_right(source)
        if created != Outcome.success(target):
            return Verdict(law, False, Witness((source,), Outcome.success(target), created))
        put_back = lens.put_left(updated_target, source)
        if put_back != Outcome.success(updated_source):
            return Verdict(
                law,
                False,
                Witness((updated_target, source), Outcome.success(updated_source), put_back),
            )
    if fixture.left_update is not None:
        source, target, updated_target, updated_source = fixture.left_update
        created = lens.create_left(source)
        if created != Outcome.success(target):
            return Verdict(law, False, Witness((source,), Outcome.success(target), created))
        put_back = lens.put_right(updated_target, source)
        if put_back != Outcome.success(updated_source):
            return Verdict(
                law,
                False,
                Witness((updated_target, source), Outcome.success(updated_source), put_back),
            )
    return Verdict(law, True)


def symmetric_law_report(lens: SymmetricLens[X, Y], fixture: LensFixture[X, Y]) -> LawReport:
    """Run all six symmetric checks on one fixture."""
    put_put_right, put_put_left = check_put_put(lens, fixture)
    return LawReport(
        verdicts=(
            check_create_put_rl(lens, fixture),
            check_create_put_lr(lens, fixture),
            check_put_rl(lens, fixture),
            check_put_lr(lens, fixture),
            put_put_right,
            put_put_left,
        )
    )


def check_asymmetric_laws(lens: AsymmetricLens, source: object, view: object) -> LawReport:
    """Evaluate PutGet, GetPut, CreateGet and PutTwice on one point."""
    put_get = lens.put(view, source).bind(lens.get)
    get_put = lens.get(source).bind(lambda v: lens.put(v, source))
    create_get = lens.create(view).bind(lens.get)
    put_once = lens.put(view, source)
    if put_once.is_success:
        put_twice_verdict = _verdict(
            "PutTwice", (view, source), put_once, lens.put(view, put_once.data)
        )
    else:
        put_twice_verdict = Verdict("PutTwice", True)
    return LawReport(
        verdicts=(
            _verdict("PutGet", (view, source), Outcome.success(view), put_get),
            _verdict("GetPut", (source,), Outcome.success(source), get_put),
            _verdict("CreateGet", (view,), Outcome.success(view), create_get),
            put_twice_verdict,
        )
    )


def randomized_suite(
    lens: SymmetricLens[X, Y],
    generator_left: Callable[[random.Random], X],
    generator_right: Callable[[random.Random], Y],
    n: int,
    seed: int = 0,
) -> LawReport:
    """Run the six symmetric checks on n generated input pairs.

    Generators receive a seeded random instance and must emit domain-valid
    values. The first counterexample per law is kept; n = 0 passes
    vacuously. The report records the seed for reproducibility.
    """
    rng = random.Random(seed)
    checks: Tuple[Tuple[str, Callable], ...] = (
        ("CreatePutRL", check_create_put_rl),
        ("CreatePutLR", check_create_put_lr),
        ("PutRL", check_put_rl),
        ("PutLR", check_put_lr),
        ("PutPutRight", _check_put_put_right),
        ("PutPutLeft", _check_put_put_left),
    )
    first_failure = {}
    for _ in range(n):
        fixture = LensFixture(generator_left(rng), generator_right(rng))
        for law, check in checks:
            if law in first_failure:
                continue
            verdict = check(lens, fixture)
            if not verdict.passed:
                first_failure[law] = verdict
    verdicts = tuple(first_failure.get(law, Verdict(law, True)) for law, _ in checks)
    return LawReport(verdicts=verdicts, seed=seed, cases=n)
