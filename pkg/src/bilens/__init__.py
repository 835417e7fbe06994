"""Bidirectional transformation lenses.

Symmetric lenses keep two structures consistent through create and put
functions in both directions, every one returning an Outcome that carries
either the result or an error message. The package provides primitive and
string lenses, generic combinators, relational structure and data lenses,
file canonizers, a round-tripping law harness, and a synchronization CLI.
"""

from .outcome import Outcome, failure, success
from .core import (
    AsymmetricLens,
    EitherValue,
    SymmetricLens,
    asym_to_sym,
    compose,
    invert,
    join_either,
    or_combinator,
)
from .values import (
    UNIT,
    ValueKind,
    add_lens,
    day_of_month_lens,
    decimal_add_lens,
    decimal_sub_lens,
    identity_lens,
    int_string_lens,
    string_datetime_lens,
    sub_lens,
)
from .strings import StringLens, StringLensAtom, concat, del_lens, id_lens, ins_lens
from .laws import (
    LawReport,
    LensFixture,
    Verdict,
    Witness,
    check_asymmetric_laws,
    check_create_put_lr,
    check_create_put_rl,
    check_put_lr,
    check_put_put,
    check_put_rl,
    check_update_round_trip,
    randomized_suite,
    symmetric_law_report,
)

__all__ = [
    "Outcome",
    "success",
    "failure",
    "SymmetricLens",
    "AsymmetricLens",
    "EitherValue",
    "asym_to_sym",
    "compose",
    "or_combinator",
    "join_either",
    "invert",
    "ValueKind",
    "UNIT",
    "identity_lens",
    "add_lens",
    "sub_lens",
    "decimal_add_lens",
    "decimal_sub_lens",
    "int_string_lens",
    "string_datetime_lens",
    "day_of_month_lens",
    "StringLens",
    "StringLensAtom",
    "id_lens",
    "ins_lens",
    "del_lens",
    "concat",
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
