"""Tests for the plain-text point-set file format."""

import random

import pytest

from helpers import random_point_set
from sumsetlab import (
    LatticeSet,
    PointFormatError,
    dump_points,
    dumps_points,
    load_points,
    loads_points,
)


class TestLoads:
    def test_basic(self):
        report = loads_points("0 0\n1 0\n0 1\n")
        assert set(report.points.points) == {(0, 0), (1, 0), (0, 1)}
        assert report.line_count == 3
        assert report.duplicate_count == 0

    def test_comments_and_blank_lines(self):
        text = "# header comment\n\n0 0\n# inline note\n1 1\n\n"
        report = loads_points(text)
        assert set(report.points.points) == {(0, 0), (1, 1)}
        assert report.line_count == 2

    def test_duplicates_merged_with_count(self):
        report = loads_points("2 3\n2 3\n0 0\n2 3\n")
        assert len(report.points) == 2
        assert report.duplicate_count == 2

    def test_negative_coordinates(self):
        report = loads_points("-1 -2\n3 -4\n")
        assert set(report.points.points) == {(-1, -2), (3, -4)}

    def test_dimension_from_first_line(self):
        report = loads_points("1 2 3\n4 5 6\n")
        assert report.points.dim == 3

    def test_dimension_mismatch_reports_line(self):
        with pytest.raises(PointFormatError) as exc:
            loads_points("0 0\n1 2 3\n", source="pts.txt")
        assert "pts.txt:2" in str(exc.value)

    def test_non_integer_token_reports_line(self):
        with pytest.raises(PointFormatError) as exc:
            loads_points("0 0\n0 x\n", source="pts.txt")
        assert "pts.txt:2" in str(exc.value)

    def test_empty_input_rejected(self):
        with pytest.raises(PointFormatError):
            loads_points("# only comments\n")


class TestDumps:
    def test_round_trip(self):
        a = LatticeSet([(0, 0), (1, 5), (-2, 3)])
        text = dumps_points(a)
        again = loads_points(text)
        assert set(again.points.points) == set(a.points)

    def test_header_is_comment(self):
        a = LatticeSet([(1, 2)])
        text = dumps_points(a, header="kind=box d=2")
        assert text.splitlines()[0].startswith("#")
        assert "kind=box" in text.splitlines()[0]
        assert set(loads_points(text).points.points) == {(1, 2)}

    def test_deterministic_order(self):
        a = LatticeSet([(1, 0), (0, 1), (0, 0)])
        b = LatticeSet([(0, 0), (0, 1), (1, 0)])
        assert dumps_points(a) == dumps_points(b)

    def test_round_trip_random(self):
        rng = random.Random(606)
        for _ in range(50):
            d = rng.randint(1, 4)
            a = LatticeSet(random_point_set(rng, d, rng.randint(1, 30), 9))
            again = loads_points(dumps_points(a))
            assert set(again.points.points) == set(a.points)
            assert again.duplicate_count == 0


class TestFiles:
    def test_dump_and_load(self, tmp_path):
        path = tmp_path / "pts.txt"
        a = LatticeSet([(0, 0), (2, 1)])
        dump_points(a, path, header="two points")
        report = load_points(path)
        assert set(report.points.points) == set(a.points)

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_points(tmp_path / "nope.txt")

    def test_error_names_file_and_line(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 0\nbroken line\n")
        with pytest.raises(PointFormatError) as exc:
            load_points(path)
        assert "bad.txt:2" in str(exc.value)
