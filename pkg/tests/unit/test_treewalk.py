"""Unit tests for tree addresses and the edge-label automaton."""

from typing import Tuple

import pytest

from farey_duality.arith.treewalk import (
    LabelState,
    Step,
    address_to_flipword,
    addresses_at_depth,
    addresses_to_depth,
    flipword_to_address,
    format_address,
    format_flipword,
    parse_address,
    parse_flipword,
    root_state,
    step_labels,
)
from farey_duality.errors import InvalidAddressError, InvalidWordError

L, R = Step.LEFT, Step.RIGHT


def test_root_state() -> None:
    """Test the root sends edge 1 to the Right child and edge 2 to the Left child."""
    assert root_state() == LabelState(2, 1)
    assert step_labels(root_state(), R)[0] == 1
    assert step_labels(root_state(), L)[0] == 2


@pytest.mark.parametrize(
    ("state", "step", "label", "next_state"),
    [
        (LabelState(2, 1), R, 1, LabelState(2, 3)),
        (LabelState(2, 1), L, 2, LabelState(3, 1)),
        (LabelState(2, 3), R, 3, LabelState(2, 1)),
    ],
)
def test_step_labels(state: LabelState, step: Step, label: int, next_state: LabelState) -> None:
    """Test one step of the labeling rule."""
    assert step_labels(state, step) == (label, next_state)


def test_label_state_rejects_equal_labels() -> None:
    """Test the two child edges must carry different labels."""
    with pytest.raises(InvalidWordError):
        LabelState(1, 1)


@pytest.mark.parametrize(
    ("addr", "word"),
    [((), ()), ((R, L), (1, 2)), ((L, L), (2, 3)), ((L, R), (2, 1))],
)
def test_address_to_flipword(addr: Tuple[Step, ...], word: Tuple[int, ...]) -> None:
    """Test conversion in both directions on known paths."""
    assert address_to_flipword(addr) == word
    assert flipword_to_address(word) == addr


def test_first_two_levels_carry_six_labels() -> None:
    """Test the labels of the first two levels read 1, 2 then 2, 3, 3, 1 top to bottom."""
    level_one = [address_to_flipword(addr)[-1] for addr in addresses_at_depth(1)]
    level_two = [address_to_flipword(addr)[-1] for addr in addresses_at_depth(2)]

    assert level_one == [1, 2]
    assert level_two == [3, 2, 1, 3]


def test_round_trip_and_incoming_label_rule() -> None:
    """Test round trips and that a child edge never repeats the incoming label."""
    for addr in addresses_to_depth(14):
        word = address_to_flipword(addr)
        assert flipword_to_address(word) == addr
        state = root_state()
        incoming = 3
        for step in addr:
            assert incoming not in (state.left_label, state.right_label)
            incoming, state = step_labels(state, step)


@pytest.mark.parametrize("word", [(3,), (1, 1), (2, 3, 3), (1, 4)])
def test_flipword_to_address_rejects_invalid_words(word: Tuple[int, ...]) -> None:
    """Test repeated labels, a leading 3 and unknown labels are rejected."""
    with pytest.raises(InvalidWordError):
        flipword_to_address(word)


def test_address_text_forms() -> None:
    """Test parsing and formatting of address strings."""
    assert parse_address("RL") == (R, L)
    assert parse_address("rl") == (R, L)
    assert parse_address("") == ()
    assert format_address((L, R, R)) == "LRR"
    with pytest.raises(InvalidAddressError):
        parse_address("RX")


def test_flipword_text_forms() -> None:
    """Test parsing and formatting of flip word strings."""
    assert parse_flipword("12") == (1, 2)
    assert parse_flipword("") == ()
    assert format_flipword((2, 3, 1)) == "231"
    with pytest.raises(InvalidWordError):
        parse_flipword("1,2")
    with pytest.raises(InvalidWordError):
        parse_flipword("31")
    with pytest.raises(InvalidWordError):
        parse_flipword("1\u00b2")


def test_addresses_at_depth_order() -> None:
    """Test levels are listed all-Right first."""
    assert list(addresses_at_depth(0)) == [()]
    assert [format_address(a) for a in addresses_at_depth(2)] == ["RR", "RL", "LR", "LL"]
    assert len(list(addresses_to_depth(3))) == 15
