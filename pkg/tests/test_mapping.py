import json
from datetime import datetime

from bilens.mapping import build_lens, load_mapping, parse_mapping
from bilens.relational import LensKind

STUDENTS_MAPPING = {
    "leftTable": "Students",
    "rightTable": "Students",
    "key": "StudentID",
    "columns": [
        {"kind": "identity", "name": "StudentID", "type": "integer"},
        {"kind": "identity", "name": "FirstName", "type": "string"},
        {"kind": "identity", "name": "LastName", "type": "string"},
        {"kind": "delete", "left": "Major", "type": "string", "default": "Undeclared"},
        {
            "kind": "delete",
            "left": "EnrollmentDate",
            "type": "datetime",
            "default": "2020-09-01T00:00:00",
        },
        {"kind": "insert", "right": "BillingAddress", "type": "string", "default": "unknown"},
    ],
}


def mapping_text(**overrides):
    document = dict(STUDENTS_MAPPING, **overrides)
    return json.dumps(document)


class TestParse:
    def test_students_mapping_parses(self):
        out = parse_mapping(mapping_text())
        assert out.is_success
        config = out.data
        assert config.left_table == "Students"
        assert config.key == "StudentID"
        kinds = [c.kind for c in config.columns]
        assert kinds == ["identity", "identity", "identity", "delete", "delete", "insert"]
        assert config.columns[4].default == datetime(2020, 9, 1)

    def test_identity_name_expands_to_both_sides(self):
        config = parse_mapping(mapping_text()).data
        first = config.columns[0]
        assert first.left == first.right == "StudentID"

    def test_rename_needs_both_names(self):
        out = parse_mapping(
            json.dumps(
                {
                    "leftTable": "T",
                    "rightTable": "T",
                    "key": "id",
                    "columns": [
                        {"kind": "identity", "name": "id", "type": "integer"},
                        {"kind": "rename", "left": "a", "right": "b", "type": "string"},
                    ],
                }
            )
        )
        assert out.is_success
        out = parse_mapping(
            json.dumps(
                {
                    "leftTable": "T",
                    "rightTable": "T",
                    "key": "id",
                    "columns": [{"kind": "rename", "left": "a", "type": "string"}],
                }
            )
        )
        assert out.is_failure and "right" in out.error

    def test_unknown_kind(self):
        columns = [{"kind": "copy", "name": "id", "type": "integer"}]
        out = parse_mapping(mapping_text(columns=columns))
        assert out.is_failure and "copy" in out.error

    def test_unknown_type(self):
        columns = [{"kind": "identity", "name": "id", "type": "float"}]
        out = parse_mapping(mapping_text(columns=columns))
        assert out.is_failure and "float" in out.error

    def test_default_must_parse_for_its_type(self):
        columns = [
            {"kind": "identity", "name": "id", "type": "integer"},
            {"kind": "insert", "right": "n", "type": "integer", "default": "not a number"},
        ]
        out = parse_mapping(mapping_text(columns=columns))
        assert out.is_failure and "not a number" in out.error

    def test_boolean_default_accepts_json_boolean(self):
        columns = [
            {"kind": "identity", "name": "id", "type": "integer"},
            {"kind": "insert", "right": "ok", "type": "boolean", "default": False},
        ]
        out = parse_mapping(mapping_text(columns=columns))
        assert out.is_success
        assert out.data.columns[1].default is False

    def test_identity_rejects_stray_fields(self):
        columns = [{"kind": "identity", "name": "id", "type": "integer", "default": "1"}]
        out = parse_mapping(mapping_text(columns=columns))
        assert out.is_failure

    def test_not_json(self):
        assert parse_mapping("{nope").is_failure

    def test_missing_table_names(self):
        out = parse_mapping(json.dumps({"key": "id", "columns": []}))
        assert out.is_failure


class TestBuild:
    def test_students_mapping_builds(self):
        lens = build_lens(parse_mapping(mapping_text()).data)
        assert lens.is_success
        built = lens.data
        assert built.key_column == "StudentID"
        assert built.structural.kind is LensKind.IDENTITY
        assert [l.kind for l in built.column_data_lenses] == [
            LensKind.IDENTITY,
            LensKind.IDENTITY,
            LensKind.IDENTITY,
            LensKind.DELETE,
            LensKind.DELETE,
            LensKind.INSERT,
        ]

    def test_differing_table_names_build_a_rename(self):
        config = parse_mapping(mapping_text(rightTable="Billing")).data
        built = build_lens(config)
        assert built.is_success
        assert built.data.structural.kind is LensKind.RENAME

    def test_key_must_be_an_identity_column(self):
        config = parse_mapping(mapping_text(key="Major")).data
        out = build_lens(config)
        assert out.is_failure and "identity" in out.error

    def test_duplicate_columns_rejected(self):
        columns = [
            {"kind": "identity", "name": "id", "type": "integer"},
            {"kind": "identity", "name": "id", "type": "integer"},
        ]
        config = parse_mapping(mapping_text(columns=columns, key="id")).data
        assert build_lens(config).is_failure


def test_load_mapping_from_disk(tmp_path):
    path = tmp_path / "map.json"
    path.write_text(mapping_text(), encoding="utf-8")
    assert load_mapping(str(path)).is_success
    assert load_mapping(str(tmp_path / "absent.json")).is_failure
