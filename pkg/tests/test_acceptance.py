"""Acceptance suite: one test per criterion, each printing a PASS line and
enforcing its stated tolerance and time budget (run with -s to see the
lines)."""

import itertools
import random
import time
from datetime import datetime
from decimal import Decimal

from click.testing import CliRunner

from bilens import (
    EitherValue,
    ValueKind,
    check_update_round_trip,
    identity_lens,
    join_either,
    randomized_suite,
    success,
    symmetric_law_report,
)
from bilens.canonize import csv_load, csv_store, json_load, json_store
from bilens.cli import main
from bilens.relational import (
    ColumnSide,
    ColumnSpec,
    LensKind,
    TableSpec,
    column_delete,
    column_disconnect,
    column_identity,
    column_insert,
    column_rename,
    data_delete,
    data_disconnect,
    data_identity,
    data_insert,
    data_rename,
    make_table_data_lens,
    table_identity_lens,
    table_lens_as_symmetric,
)

from tests.lens_catalog import CATALOG, beautify_pipeline, day_reminder_or, int_chain
from tests.test_canonize import random_table
from tests.test_data import academic_row, academic_table, financial_row, financial_table
from tests.test_mapping import mapping_text

K = ValueKind
DATA_TYPES = (K.INTEGER, K.LONG, K.DECIMAL, K.BOOLEAN, K.DATETIME, K.STRING)


def best_of(runs, operation):
    """Smallest wall time over several runs, to shake off scheduler noise."""
    times = []
    for _ in range(runs):
        start = time.perf_counter()
        operation()
        times.append(time.perf_counter() - start)
    return min(times)


def cells(row):
    return {c.column_name: c.value for c in row.cells}


def test_criterion_1_beautify_regression():
    lens = beautify_pipeline()
    csv_line = "John;Doe;35;New York"
    beautified = "Name: John Doe, Age: 35, City: New York"

    assert lens.create_right(csv_line) == success(beautified)
    assert lens.create_left(beautified) == success(csv_line)
    elapsed = best_of(5, lambda: lens.create_right(csv_line))
    assert elapsed < 0.001, f"createRight took {elapsed * 1000:.3f} ms"
    print("ACCEPTANCE 1: PASS - beautify pipeline maps both ways exactly")


def test_criterion_2_integer_chain_regression():
    chain = int_chain()
    assert chain.create_right(10) == success(13)
    assert chain.put_left(11, 10) == success(8)
    elapsed = best_of(5, lambda: (chain.create_right(10), chain.put_left(11, 10)))
    assert elapsed < 0.001, f"chain took {elapsed * 1000:.3f} ms"
    print("ACCEPTANCE 2: PASS - integer chain gives 13 and 8")


def test_criterion_3_or_combinator_regression():
    lens = day_reminder_or()
    iso = "1992-12-31T00:00:00"
    moment = datetime(1992, 12, 31)

    assert lens.create_right(EitherValue.left(iso)).map(join_either) == success(30)
    assert lens.create_right(EitherValue.right(moment)).map(join_either) == success(30)
    restored = lens.put_left(EitherValue.left(30), EitherValue.left(iso))
    assert restored == success(EitherValue.left(iso))
    elapsed = best_of(5, lambda: lens.create_right(EitherValue.left(iso)))
    assert elapsed < 0.001, f"or-combinator took {elapsed * 1000:.3f} ms"
    print("ACCEPTANCE 3: PASS - both routes join to 30 and putLeft restores the date string")


def test_criterion_4_law_suite():
    start = time.perf_counter()
    assert len(CATALOG) >= 15
    randomized_count = 0
    for entry in CATALOG:
        report = symmetric_law_report(entry.lens, entry.fixture)
        assert report.passed, f"{entry.name}: {report}"
        assert check_update_round_trip(entry.lens, entry.fixture).passed, entry.name
        if entry.gen_left is not None and entry.gen_right is not None:
            randomized = randomized_suite(
                entry.lens, entry.gen_left, entry.gen_right, 1000, seed=2024
            )
            assert randomized.passed, f"{entry.name}: {randomized}"
            randomized_count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 30, f"law suite took {elapsed:.1f} s"
    print(
        f"ACCEPTANCE 4: PASS - {len(CATALOG)} lenses obey all laws, "
        f"{randomized_count} of them on 1000 random cases each, in {elapsed:.1f} s"
    )


def test_criterion_5_disconnect_basis():
    rng = random.Random(31)
    start = time.perf_counter()
    for _ in range(100):
        shared = [
            column_identity(f"s{i}", rng.choice(DATA_TYPES)) for i in range(rng.randint(1, 4))
        ]
        probe_name = "probe"
        probe_type = rng.choice(DATA_TYPES)
        position = rng.randint(0, len(shared))
        shared_cols = tuple(ColumnSpec(l.left.name, l.left.type) for l in shared)
        probe_col = ColumnSpec(probe_name, probe_type)
        with_probe = TableSpec("T", shared_cols[:position] + (probe_col,) + shared_cols[position:])
        without_probe = TableSpec("T", shared_cols)

        def lens_pair(column_a, column_b):
            lenses_a, lenses_b = list(shared), list(shared)
            lenses_a.insert(position, column_a)
            lenses_b.insert(position, column_b)
            return (
                table_lens_as_symmetric(table_identity_lens("T", lenses_a)),
                table_lens_as_symmetric(table_identity_lens("T", lenses_b)),
            )

        cases = (
            (
                column_delete(probe_name, probe_type),
                column_disconnect(ColumnSide(probe_name, probe_type), None),
                with_probe,
                without_probe,
            ),
            (
                column_insert(probe_name, probe_type),
                column_disconnect(None, ColumnSide(probe_name, probe_type)),
                without_probe,
                with_probe,
            ),
        )
        for plain, basis, left_table, right_table in cases:
            lens_a, lens_b = lens_pair(plain, basis)
            assert lens_a.create_right(left_table) == lens_b.create_right(left_table)
            assert lens_a.create_left(right_table) == lens_b.create_left(right_table)
            assert lens_a.put_right(left_table, right_table) == lens_b.put_right(
                left_table, right_table
            )
            assert lens_a.put_left(right_table, left_table) == lens_b.put_left(
                right_table, left_table
            )
    elapsed = time.perf_counter() - start
    assert elapsed < 5, f"disconnect basis took {elapsed:.1f} s"
    print("ACCEPTANCE 5: PASS - delete and insert match disconnect on 100 random probe tables")


def test_criterion_6_case_study_end_to_end(tmp_path):
    start = time.perf_counter()
    shared = [(k, f"First{k}", f"Last{k}") for k in (1, 2, 3, 4, 5)]
    academic_only = [(6, "Ada", "Byron"), (7, "Grace", "Hopper"), (8, "Edsger", "Dijkstra")]
    financial_only = [(9, "Alan", "Turing"), (10, "John", "Neumann"), (11, "Barbara", "Liskov")]

    academic = academic_table(
        *(
            academic_row(k, first, last, major=f"M{k}", enrolled=datetime(2020 + k % 3, 9, 1))
            for k, first, last in shared + academic_only
        )
    )
    financial = financial_table(
        *(
            financial_row(k, first, last, billing=f"{k} Main St")
            for k, first, last in shared + financial_only
        )
    )

    mapping = tmp_path / "mapping.json"
    mapping.write_text(mapping_text(), encoding="utf-8")
    left, right = tmp_path / "academic.csv", tmp_path / "financial.csv"
    csv_store(academic, str(left))
    csv_store(financial, str(right))
    out_left, out_right = tmp_path / "academic.out.csv", tmp_path / "financial.out.csv"

    runner = CliRunner()
    result = runner.invoke(
        main,
        [
            "sync",
            "--left", str(left),
            "--right", str(right),
            "--left-format", "csv",
            "--right-format", "csv",
            "--mapping", str(mapping),
            "--mode", "full-sync",
            "--out-left", str(out_left),
            "--out-right", str(out_right),
        ],
    )
    assert result.exit_code == 0, result.stderr

    new_left = csv_load(str(out_left), "Students", "StudentID").data
    new_right = csv_load(str(out_right), "Students", "StudentID").data

    all_keys = set(range(1, 12))
    assert {new_left.key_of(r) for r in new_left.rows} == all_keys
    assert {new_right.key_of(r) for r in new_right.rows} == all_keys

    left_columns = [c.name for c in new_left.spec.columns]
    right_columns = [c.name for c in new_right.spec.columns]
    assert "BillingAddress" not in left_columns
    assert "Major" not in right_columns and "EnrollmentDate" not in right_columns

    left_shared = {
        new_left.key_of(r): (cells(r)["FirstName"], cells(r)["LastName"]) for r in new_left.rows
    }
    right_shared = {
        new_right.key_of(r): (cells(r)["FirstName"], cells(r)["LastName"]) for r in new_right.rows
    }
    assert left_shared == right_shared

    billing = {new_right.key_of(r): cells(r)["BillingAddress"] for r in new_right.rows}
    for k, _first, _last in shared + financial_only:
        assert billing[k] == f"{k} Main St"
    for k, _first, _last in academic_only:
        assert billing[k] == "unknown"

    # running the sync again on its own outputs changes nothing
    out_left2, out_right2 = tmp_path / "l2.csv", tmp_path / "r2.csv"
    result = runner.invoke(
        main,
        [
            "sync",
            "--left", str(out_left),
            "--right", str(out_right),
            "--mapping", str(mapping),
            "--mode", "full-sync",
            "--out-left", str(out_left2),
            "--out-right", str(out_right2),
        ],
    )
    assert result.exit_code == 0
    assert out_left.read_bytes() == out_left2.read_bytes()
    assert out_right.read_bytes() == out_right2.read_bytes()

    elapsed = time.perf_counter() - start
    assert elapsed < 2, f"case study took {elapsed:.1f} s"
    print("ACCEPTANCE 6: PASS - full sync converges 11 keys with exclusive columns masked")


def test_criterion_7_canonizer_fidelity(tmp_path):
    rng = random.Random(77)
    start = time.perf_counter()
    for i in range(100):
        table = random_table(rng)
        csv_a, csv_b = tmp_path / f"{i}a.csv", tmp_path / f"{i}b.csv"
        json_a = tmp_path / f"{i}.json"

        assert csv_store(table, str(csv_a)).is_success
        from_csv = csv_load(str(csv_a), table.spec.name, table.key_column)
        assert from_csv.is_success and from_csv.data == table

        assert csv_store(from_csv.data, str(csv_b)).is_success
        assert csv_a.read_bytes() == csv_b.read_bytes()

        assert json_store(from_csv.data, str(json_a)).is_success
        from_json = json_load(str(json_a))
        assert from_json.is_success and from_json.data == table
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"canonizer fidelity took {elapsed:.1f} s"
    print("ACCEPTANCE 7: PASS - 100 random tables survive CSV and JSON round trips bit-exactly")


def test_criterion_8_compatibility_validation():
    start = time.perf_counter()
    structural_by_kind = {
        LensKind.IDENTITY: column_identity("c", K.STRING),
        LensKind.RENAME: column_rename("c", "d", K.STRING),
        LensKind.INSERT: column_insert("c", K.STRING),
        LensKind.DELETE: column_delete("c", K.STRING),
        LensKind.DISCONNECT: column_disconnect(ColumnSide("c", K.STRING), None),
    }
    data_maker_by_kind = {
        LensKind.IDENTITY: lambda s: data_identity(s, identity_lens(K.STRING)),
        LensKind.RENAME: lambda s: data_rename(s, identity_lens(K.STRING)),
        LensKind.INSERT: lambda s: data_insert(s, "default"),
        LensKind.DELETE: lambda s: data_delete(s, "default"),
        LensKind.DISCONNECT: data_disconnect,
    }
    key = column_identity("k", K.INTEGER)
    for structural_kind, data_kind in itertools.product(LensKind, LensKind):
        structural_col = structural_by_kind[structural_kind]
        data_col = data_maker_by_kind[data_kind](structural_col)
        out = make_table_data_lens(
            table_identity_lens("T", (key, structural_col)),
            (data_identity(key, identity_lens(K.INTEGER)), data_col),
            "k",
        )
        if structural_kind is not data_kind:
            assert out.is_failure, f"{structural_kind} with {data_kind} must be rejected"

    # the admin/hours configuration with identity value lenses and defaults
    s_id = column_identity("id", K.INTEGER)
    s_name = column_identity("name", K.STRING)
    s_dob = column_identity("dob", K.DATETIME)
    s_admin = column_insert("isAdmin", K.BOOLEAN)
    s_hours = column_insert("hoursClocked", K.DECIMAL)
    accepted = make_table_data_lens(
        table_identity_lens("People", (s_id, s_name, s_dob, s_admin, s_hours)),
        (
            data_identity(s_id, identity_lens(K.INTEGER)),
            data_identity(s_name, identity_lens(K.STRING)),
            data_identity(s_dob, identity_lens(K.DATETIME)),
            data_insert(s_admin, False),
            data_insert(s_hours, Decimal("0.0")),
        ),
        "id",
    )
    assert accepted.is_success
    elapsed = time.perf_counter() - start
    assert elapsed < 1, f"compatibility validation took {elapsed:.2f} s"
    print("ACCEPTANCE 8: PASS - every cross-kind pairing rejected, reference configuration accepted")
