import pytest
from hypothesis import given
from hypothesis import strategies as st

from bilens import failure, success


def half(n):
    if n % 2:
        return failure(f"{n} is odd")
    return success(n // 2)


def test_success_exposes_data():
    assert success(7).is_success
    assert success(7).data == 7


def test_failure_exposes_error():
    out = failure("broken")
    assert out.is_failure
    assert out.error == "broken"


def test_data_on_failure_raises():
    with pytest.raises(ValueError):
        failure("broken").data


def test_error_on_success_raises():
    with pytest.raises(ValueError):
        success(1).error


def test_bind_on_failure_skips_continuation():
    called = []
    out = failure("broken").bind(lambda v: called.append(v) or success(v))
    assert out == failure("broken")
    assert called == []


def test_bind_on_success_applies_continuation():
    assert success(4).bind(half) == success(2)
    assert success(3).bind(half) == failure("3 is odd")


def test_map_and_map_error():
    assert success(2).map(lambda v: v * 10) == success(20)
    assert failure("x").map(lambda v: v * 10) == failure("x")
    assert failure("x").map_error(lambda m: m + "!") == failure("x!")
    assert success(2).map_error(lambda m: m + "!") == success(2)


def test_match_collapses_both_branches():
    assert success(2).match(lambda v: v + 1, lambda m: -1) == 3
    assert failure("m").match(lambda v: v + 1, lambda m: m.upper()) == "M"


def test_repr_readable():
    assert repr(success(2)) == "success(2)"
    assert repr(failure("no")) == "failure('no')"


# Monad laws, on concrete values.

@given(st.integers())
def test_left_identity(n):
    assert success(n).bind(half) == half(n)


@given(st.integers())
def test_right_identity(n):
    assert success(n).bind(success) == success(n)


@given(st.integers())
def test_associativity(n):
    add3 = lambda v: success(v + 3)
    m = success(n)
    assert m.bind(half).bind(add3) == m.bind(lambda v: half(v).bind(add3))


@given(st.text())
def test_failure_identities(message):
    assert failure(message).bind(success) == failure(message)
    assert failure(message).bind(half) == failure(message)
