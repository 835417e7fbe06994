import pytest

from bilens import concat, del_lens, id_lens, ins_lens, success

from tests.lens_catalog import beautify_pipeline

CSV_LINE = "John;Doe;35;New York"
BEAUTIFIED = "Name: John Doe, Age: 35, City: New York"


class TestIdLens:
    def test_copies_matching_input(self):
        lens = id_lens("Hello, [a-zA-Z]+!")
        assert lens.create_right("Hello, World!") == success("Hello, World!")

    def test_put_copies_the_updated_side(self):
        assert id_lens(r"\d+").put_left("42", "7") == success("42")

    def test_no_match_is_an_error(self):
        out = id_lens("[a-z]+").create_right("ABC")
        assert out.is_failure
        assert "[a-z]+" in out.error and "ABC" in out.error

    def test_partial_match_must_consume_everything(self):
        out = id_lens("[a-z]+").create_right("abc1")
        assert out.is_failure
        assert "unconsumed" in out.error

    def test_bad_pattern_rejected_at_construction(self):
        with pytest.raises(ValueError):
            id_lens("(unclosed")

    @pytest.mark.parametrize("pattern", [r"(a)\1", "(?=a)", "(?<!x)y", "(?P<g>a)(?P=g)"])
    def test_backreferences_and_lookaround_rejected(self, pattern):
        with pytest.raises(ValueError):
            id_lens(pattern)


class TestInsLens:
    def test_inserts_going_right(self):
        assert ins_lens("Name: ").create_right("") == success("Name: ")

    def test_removes_going_left(self):
        assert ins_lens("Name: ").create_left("Name: ") == success("")

    def test_constant_mismatch_is_an_error(self):
        assert ins_lens(", ").put_left("; ", "").is_failure

    def test_left_input_must_be_empty(self):
        assert ins_lens("x").create_right("y").is_failure


class TestDelLens:
    def test_removes_going_right(self):
        assert del_lens(";").create_right(";") == success("")

    def test_reinserts_going_left(self):
        assert del_lens(";").create_left("") == success(";")

    def test_constant_mismatch_is_an_error(self):
        assert del_lens(";").create_right(",").is_failure


class TestConcat:
    def test_beautify_create_right(self):
        assert beautify_pipeline().create_right(CSV_LINE) == success(BEAUTIFIED)

    def test_beautify_create_left(self):
        assert beautify_pipeline().create_left(BEAUTIFIED) == success(CSV_LINE)

    def test_single_identity_segment(self):
        lens = concat([id_lens(".*")])
        for text in ("", "anything at all", "123"):
            assert lens.create_right(text) == success(text)

    def test_needs_at_least_one_lens(self):
        with pytest.raises(ValueError):
            concat([])

    def test_rejects_non_string_lenses(self):
        from bilens import add_lens

        with pytest.raises(TypeError):
            concat([add_lens(1)])

    def test_flattening_keeps_atom_order(self):
        a, b, c = ins_lens("a"), id_lens("x+"), del_lens("z")
        grouped_left = (a & b) & c
        grouped_right = a & (b & c)
        assert grouped_left.atoms == grouped_right.atoms

    def test_failure_reports_offset_and_lens_index(self):
        lens = id_lens("[a-z]+") & del_lens(";") & id_lens("[a-z]+")
        out = lens.create_right("abc,def")
        assert out.is_failure
        assert "lens 1" in out.error and "offset 3" in out.error

    def test_ambiguous_pipelines_fail_loudly(self):
        # the first atom greedily eats everything; no backtracking rescues
        # the second, so the author hears about the ambiguity immediately
        lens = id_lens("[a-z]+") & id_lens("[a-z]+")
        out = lens.create_right("ab")
        assert out.is_failure
        assert "lens 1" in out.error

    def test_updating_one_segment_touches_only_its_counterpart(self):
        lens = beautify_pipeline()
        updated = BEAUTIFIED.replace("35", "36")
        assert lens.put_left(updated, CSV_LINE) == success("John;Doe;36;New York")
        assert lens.put_right("Jane;Doe;35;New York", BEAUTIFIED) == success(
            "Name: Jane Doe, Age: 35, City: New York"
        )


class TestSegmentInvariant:
    def test_split_covers_the_input_exactly(self):
        lens = beautify_pipeline()
        left_segments = lens.split_left(CSV_LINE)
        right_segments = lens.split_right(BEAUTIFIED)
        assert left_segments.is_success and right_segments.is_success
        assert len(left_segments.data) == len(lens.atoms)
        assert len(right_segments.data) == len(lens.atoms)
        assert "".join(left_segments.data) == CSV_LINE
        assert "".join(right_segments.data) == BEAUTIFIED

    def test_round_trip_both_ways(self):
        lens = beautify_pipeline()
        assert lens.create_right(CSV_LINE).bind(lens.create_left) == success(CSV_LINE)
        assert lens.create_left(BEAUTIFIED).bind(lens.create_right) == success(BEAUTIFIED)
