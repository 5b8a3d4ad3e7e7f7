"""Unit tests for the lattice crossing oracle."""

import pytest

from farey_duality.arith.rational import INFINITY, MINUS_ONE, ONE, ZERO, Ratio
from farey_duality.errors import NotPrimitiveError
from farey_duality.geometry.oracle import (
    Segment,
    crossed_lines,
    crossing_count,
    verify_det,
    verify_int_inc,
)


@pytest.mark.parametrize(
    ("segment", "family", "expected"),
    [
        (Segment(2, 3), ZERO, 2),
        (Segment(1, 1), INFINITY, 0),
        (Segment(5, 3), MINUS_ONE, 7),
        (Segment(1, 1), ONE, -1),
    ],
)
def test_crossing_count(segment: Segment, family: Ratio, expected: int) -> None:
    """Test crossing counts on small cases."""
    assert crossing_count(segment, family) == expected


def test_crossing_count_of_neighbors() -> None:
    """Test Farey neighbors never cross."""
    assert crossing_count(Segment(1, 0), ONE) == 0
    assert crossing_count(Segment(2, 3), Ratio(1, 1)) == 0


def test_crossing_count_ignores_base_point() -> None:
    """Test starting the lift at another lattice point leaves the count unchanged."""
    segment = Segment(7, 4)
    for base in [(0, 0), (3, -2), (-5, 11)]:
        assert crossing_count(segment, Ratio(-3, 5), base) == 40


def test_crossed_lines_move_with_base_point() -> None:
    """Test the lines met are those through the translated segment."""
    assert list(crossed_lines(Segment(2, 3), ZERO)) == [-2, -1]
    assert list(crossed_lines(Segment(2, 3), ZERO, (4, 5))) == [-7, -6]
    # r*x - s*y starts at 1 for base (3, -2) and falls by 41 along the segment
    assert list(crossed_lines(Segment(7, 4), Ratio(-3, 5), (3, -2))) == list(range(-39, 1))
    assert list(crossed_lines(Segment(1, 1), ONE, (2, 9))) == []


def test_segment_must_be_primitive() -> None:
    """Test segments with interior lattice points or negative x are rejected."""
    with pytest.raises(NotPrimitiveError):
        Segment(2, 4)
    with pytest.raises(NotPrimitiveError):
        Segment(-1, 2)


def test_segment_from_ratio() -> None:
    """Test the lift of p/q ends at (q, p)."""
    segment = Segment.from_ratio(Ratio(3, 2))

    assert (segment.x, segment.y) == (2, 3)
    assert segment.gradient == Ratio(3, 2)
    assert Segment.from_ratio(INFINITY).gradient == INFINITY


def test_verify_int_inc() -> None:
    """Test the closed form for intersection vectors on a small range."""
    report = verify_int_inc(10)

    assert report.passed
    assert report.suite == "int-inc"
    assert report.checked > 0
    assert report.counterexample is None


def test_verify_det() -> None:
    """Test the determinant law on a small range."""
    report = verify_det(6, samples=20, seed=3)

    assert report.passed
    assert report.parameters == {"bound": 6, "samples": 20, "seed": 3}
