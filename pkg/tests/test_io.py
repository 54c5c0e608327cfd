from pathlib import Path

import numpy as np
import pytest

from relkmeans import (
    Clustering,
    FieldParseError,
    FormatError,
    SearchOutcome,
    ShapeError,
    ValidationError,
    format_input,
    parse_input,
    read_input,
    square_distances,
    write_output,
)
from relkmeans.search import AttemptRecord

DATA = Path(__file__).parent / "data"


def outcome(labels, value, attempts):
    records = [AttemptRecord(i, value, 1, i == 0) for i in range(attempts)]
    return SearchOutcome(best=Clustering(labels, max(labels) + 1), best_value=value, attempts=records)


class TestParseInput:
    def test_minimal(self):
        ds = parse_input("a\nb\n//\n0;1\n1;0\n")
        assert ds.names == ["a", "b"]
        assert ds.distances.tolist() == [[0.0, 1.0], [1.0, 0.0]]

    def test_decimal_point(self):
        assert parse_input("a\nb\n//\n0;1.5\n1.5;0\n").distances.tolist() == [[0, 1.5], [1.5, 0]]

    def test_asymmetric(self):
        with pytest.raises(ValidationError, match=r"\(1, 2\)"):
            parse_input("a\nb\n//\n0;1\n2;0\n")

    def test_padding_crlf_and_trailing_blank_lines(self):
        ds = read_input(DATA / "padded_crlf.txt")
        assert ds.names == ["a", "b"]
        assert ds.distances.tolist() == [[0, 1.5], [1.5, 0]]

    def test_bytes_and_file_objects(self):
        with open(DATA / "two_points.txt", "rb") as fh:
            assert parse_input(fh).names == ["a", "b"]
        assert parse_input(b"x\ny\n//\n0;2\n2;0").names == ["x", "y"]

    def test_names_keep_inner_text(self):
        ds = parse_input("alpha beta\n g;h \n//\n0;1\n1;0\n")
        assert ds.names == ["alpha beta", " g;h "]

    def test_rounding_noise_is_symmetrized(self):
        ds = parse_input("a\nb\n//\n1e-13;1.0000000000001\n1;0\n")
        assert ds.distances[0, 1] == ds.distances[1, 0]
        assert ds.distances[0, 0] == 0.0

    def test_scientific_notation(self):
        assert parse_input("a\nb\n//\n0;2.5e-1\n.25;0\n").distances[0, 1] == 0.25

    @pytest.mark.parametrize(
        "name, error, line, column",
        [
            ("missing_separator", FormatError, None, None),
            ("blank_name", FormatError, 2, None),
            ("single_object", FormatError, 2, None),
            ("too_few_rows", ShapeError, 7, None),
            ("too_many_rows", ShapeError, 6, None),
            ("too_many_fields", ShapeError, 4, None),
            ("comma_decimal", FieldParseError, 4, 2),
            ("not_a_number", FieldParseError, 4, 2),
            ("negative", ValidationError, 4, 2),
            ("asymmetric", ValidationError, 4, 2),
            ("nonzero_diagonal", ValidationError, 4, 1),
        ],
    )
    def test_malformed(self, name, error, line, column):
        with pytest.raises(error) as info:
            read_input(DATA / "malformed" / f"{name}.txt")
        assert info.value.line == line
        assert info.value.column == column

    def test_infinite_field_rejected(self):
        with pytest.raises(FieldParseError):
            parse_input("a\nb\n//\n0;inf\ninf;0\n")


class TestSquareDistances:
    def test_squares(self):
        ds = parse_input("a\nb\n//\n0;1.5\n1.5;0\n")
        assert square_distances(ds).tolist() == [[0, 2.25], [2.25, 0]]

    def test_zeros(self):
        ds = parse_input("a\nb\nc\n//\n0;0;0\n0;0;0\n0;0;0\n")
        assert not square_distances(ds).any()

    def test_three_points_on_a_line(self):
        A = square_distances(read_input(DATA / "three_points_1d.txt"))
        assert A.tolist() == [[0, 1, 100], [1, 0, 81], [100, 81, 0]]
        np.testing.assert_array_equal(A, A.T)


class TestWriteOutput:
    def test_basic(self):
        assert write_output(["a", "b"], outcome([0, 0], 0.5, 3)) == "# value=0.5; attempts=3\na;0\nb;0\n"

    def test_first_appearance_renumbering(self):
        assert write_output(["a", "b"], outcome([1, 0], 2.0, 1)) == "# value=2.0; attempts=1\na;0\nb;1\n"

    def test_shortest_round_trip_value(self):
        text = write_output(["a", "b"], outcome([0, 1], 0.1 + 0.2, 1))
        assert text.splitlines()[0] == "# value=0.30000000000000004; attempts=1"

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            write_output(["a"], outcome([0, 0], 0.5, 1))

    def test_matrix_round_trip(self, tmp_path):
        rng = np.random.default_rng(0)
        D = np.triu(rng.integers(0, 1 << 20, size=(6, 6)) / 1024.0, k=1)
        D = D + D.T
        names = [f"obj{i}" for i in range(6)]
        path = tmp_path / "m.txt"
        path.write_text(format_input(names, D), encoding="utf-8")
        ds = read_input(path)
        assert ds.names == names
        assert ds.distances.tobytes() == D.tobytes()

    def test_golden_three_point_file(self):
        golden = (DATA / "three_points_1d.txt").read_text()
        ds = parse_input(golden)
        assert format_input(ds.names, ds.distances) == (
            "p0\np1\np10\n//\n0.0;1.0;10.0\n1.0;0.0;9.0\n10.0;9.0;0.0\n"
        )
