"""Unit tests for the Stern-Brocot, Calkin-Wilf and Farey triple trees."""

from math import gcd
from typing import Tuple

import pytest

from farey_duality.arith.rational import INFINITY, ONE, ZERO, Ratio, cross_det
from farey_duality.arith.treewalk import (
    Step,
    address_to_flipword,
    addresses_at_depth,
    addresses_to_depth,
)
from farey_duality.errors import InvalidWordError, NotNeighborsError, OutOfDomainError
from farey_duality.trees.classic import (
    GradientTriple,
    cw_locate,
    cw_node,
    farey_triple_node,
    sb_locate,
    sb_node,
)

L, R = Step.LEFT, Step.RIGHT


@pytest.mark.parametrize(
    ("addr", "expected"),
    [((), ONE), ((R, L), Ratio(2, 3)), ((L, L, L), Ratio(1, 4))],
)
def test_cw_node(addr: Tuple[Step, ...], expected: Ratio) -> None:
    """Test Calkin-Wilf values at known positions."""
    assert cw_node(addr) == expected


@pytest.mark.parametrize(
    ("addr", "expected"),
    [((), ONE), ((R, L), Ratio(3, 2)), ((L, L, R), Ratio(2, 5))],
)
def test_sb_node(addr: Tuple[Step, ...], expected: Ratio) -> None:
    """Test Stern-Brocot values at known positions."""
    assert sb_node(addr) == expected


def test_depth_three_rows() -> None:
    """Test the fourth columns of both displays, top to bottom."""
    cw_row = [str(cw_node(a)) for a in addresses_at_depth(3)]
    sb_row = [str(sb_node(a)) for a in addresses_at_depth(3)]

    assert cw_row == ["4/1", "3/4", "5/3", "2/5", "5/2", "3/5", "4/3", "1/4"]
    assert sb_row == ["4/1", "5/2", "5/3", "4/3", "3/4", "3/5", "2/5", "1/4"]


def test_trees_are_reduced_and_distinct() -> None:
    """Test every value to depth 12 is a reduced positive fraction, with no repeats."""
    for node in (cw_node, sb_node):
        values = [node(addr) for addr in addresses_to_depth(12)]
        assert len(set(values)) == 2**13 - 1
        assert all(v.num > 0 and v.den > 0 and gcd(v.num, v.den) == 1 for v in values)


def test_stern_brocot_rows_decrease() -> None:
    """Test each Stern-Brocot level is strictly decreasing top to bottom."""
    for depth in range(1, 9):
        row = [sb_node(a) for a in addresses_at_depth(depth)]
        assert all(a > b for a, b in zip(row, row[1:]))


@pytest.mark.parametrize(
    ("word", "expected"),
    [
        ((), (ZERO, INFINITY, ONE)),
        ((1,), (Ratio(2, 1), INFINITY, ONE)),
        ((1, 2), (Ratio(2, 1), Ratio(3, 2), ONE)),
    ],
)
def test_farey_triple_node(word: Tuple[int, ...], expected: Tuple[Ratio, Ratio, Ratio]) -> None:
    """Test Farey triples at known vertices."""
    assert farey_triple_node(word).entries == expected


def test_farey_triple_node_rejects_invalid_word() -> None:
    """Test flipping back through the incoming edge is refused."""
    with pytest.raises(InvalidWordError):
        farey_triple_node((3,))
    with pytest.raises(InvalidWordError):
        farey_triple_node((1, 1))


def test_farey_triples_project_to_stern_brocot() -> None:
    """Test the second-largest entry of every Farey triple is the Stern-Brocot value."""
    for addr in addresses_to_depth(12):
        triple = farey_triple_node(address_to_flipword(addr))
        assert all(abs(cross_det(x, y)) == 1 for x, y in [triple.entries[:2], triple.entries[1:]])
        assert triple.middle() == sb_node(addr)


def test_gradient_triple_requires_unimodular_entries() -> None:
    """Test a triple of non-neighbors is rejected."""
    with pytest.raises(NotNeighborsError):
        GradientTriple(ZERO, Ratio(2, 1), ONE)
    with pytest.raises(NotNeighborsError):
        GradientTriple(ZERO, ZERO, ONE)


def test_gradient_triple_helpers() -> None:
    """Test indexing helpers of GradientTriple."""
    triple = GradientTriple(Ratio(2, 1), INFINITY, ONE)

    assert triple.entry(2) == INFINITY
    assert triple.others(2) == (Ratio(2, 1), ONE)
    assert triple.middle_index() == 1
    assert triple.replace(2, Ratio(3, 2)) == GradientTriple(Ratio(2, 1), Ratio(3, 2), ONE)


@pytest.mark.parametrize(
    ("q", "addr"),
    [(ONE, ()), (Ratio(3, 2), (R, L)), (Ratio(2, 5), (L, L, R))],
)
def test_sb_locate(q: Ratio, addr: Tuple[Step, ...]) -> None:
    """Test Stern-Brocot locations."""
    assert sb_locate(q) == addr


@pytest.mark.parametrize(
    ("q", "addr"),
    [(ONE, ()), (Ratio(3, 2), (L, R)), (Ratio(5, 3), (R, L, R))],
)
def test_cw_locate(q: Ratio, addr: Tuple[Step, ...]) -> None:
    """Test Calkin-Wilf locations."""
    assert cw_locate(q) == addr


def test_locators_round_trip() -> None:
    """Test both locators invert their trees for every p + q <= 30."""
    for total in range(2, 31):
        for p in range(1, total):
            if gcd(p, total - p) != 1:
                continue
            q = Ratio(p, total - p)
            assert sb_node(sb_locate(q)) == q
            assert cw_node(cw_locate(q)) == q


@pytest.mark.parametrize("q", [ZERO, INFINITY, Ratio(-1, 2)])
def test_locators_reject_out_of_domain(q: Ratio) -> None:
    """Test zero, infinity and negative fractions are not in the trees."""
    with pytest.raises(OutOfDomainError):
        sb_locate(q)
    with pytest.raises(OutOfDomainError):
        cw_locate(q)
