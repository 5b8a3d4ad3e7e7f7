"""Binary-tree addresses and the edge-labeling automaton over {1, 2, 3}.

Trees are drawn sideways with the larger branch on top; the top child is the
Right step. Every tree in the package shares these addresses, and the label
automaton turns an address into the flip word naming the same vertex of the
3-regular tree.
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence, Tuple

from ..errors import InvalidAddressError, InvalidWordError

logger = logging.getLogger(__name__)

LABELS = (1, 2, 3)


class Step(str, Enum):
    """One step down a binary tree."""

    LEFT = "L"
    RIGHT = "R"


TreeAddress = Tuple[Step, ...]
FlipWord = Tuple[int, ...]


def third_label(i: int, j: int) -> int:
    """Return the element of {1, 2, 3} different from both i and j."""
    return 6 - i - j


@dataclass(frozen=True)
class LabelState:
    """Labels carried by the two child edges of a vertex."""

    left_label: int
    right_label: int

    def __post_init__(self) -> None:
        if self.left_label not in LABELS or self.right_label not in LABELS:
            raise InvalidWordError(f"Labels must lie in {{1, 2, 3}}: {self}")
        if self.left_label == self.right_label:
            raise InvalidWordError(f"Child edges must carry different labels: {self}")

    @property
    def incoming_label(self) -> int:
        """The label not used by either child edge."""
        return third_label(self.left_label, self.right_label)


def root_state() -> LabelState:
    """Labels at the root: edge 1 to the Right child, edge 2 to the Left child."""
    return LabelState(left_label=2, right_label=1)


def step_labels(state: LabelState, step: Step) -> Tuple[int, LabelState]:
    """Take one step and return the label of the edge used and the child's state.

    A Left child gives its own left edge the third label and inherits the
    sibling label on its right edge; a Right child does the mirror image.
    """
    third = state.incoming_label
    if step is Step.LEFT:
        return state.left_label, LabelState(third, state.right_label)
    return state.right_label, LabelState(state.left_label, third)


def address_to_flipword(addr: Sequence[Step]) -> FlipWord:
    """Convert a Left/Right path into its edge-label word."""
    state = root_state()
    labels = []
    for step in addr:
        label, state = step_labels(state, step)
        labels.append(label)
    return tuple(labels)


def validate_flipword(word: Sequence[int]) -> FlipWord:
    """Check the flip word rules and return the word as a tuple.

    Labels lie in {1, 2, 3}, no label repeats consecutively, and the first
    label is not 3 (the root is entered through label 3).
    """
    previous = 3
    for position, label in enumerate(word):
        if label not in LABELS:
            raise InvalidWordError(f"Label {label!r} at position {position} is not in {{1, 2, 3}}")
        if label == previous:
            raise InvalidWordError(
                f"Label {label} at position {position} repeats the incoming edge label"
            )
        previous = label
    return tuple(word)


def flipword_to_address(word: Sequence[int]) -> TreeAddress:
    """Convert an edge-label word back into the Left/Right path it labels."""
    validate_flipword(word)
    state = root_state()
    steps = []
    for label in word:
        step = Step.LEFT if label == state.left_label else Step.RIGHT
        _, state = step_labels(state, step)
        steps.append(step)
    return tuple(steps)


def incoming_labels(word: Sequence[int]) -> Iterator[int]:
    """Yield the incoming edge label at every vertex along the word, root first."""
    yield 3
    yield from word


def parse_address(text: str) -> TreeAddress:
    """Parse an address such as ``RL``; the empty string is the root."""
    try:
        return tuple(Step(char) for char in text.strip().upper())
    except ValueError as e:
        raise InvalidAddressError(f"Addresses use only the letters L and R: {text!r}") from e


def format_address(addr: Iterable[Step]) -> str:
    """Render an address as a string of L and R characters."""
    return "".join(step.value for step in addr)


def parse_flipword(text: str) -> FlipWord:
    """Parse a flip word written as a digit string such as ``12``."""
    text = text.strip()
    if any(char not in "0123456789" for char in text):
        raise InvalidWordError(f"Flip words are digit strings over 1, 2, 3: {text!r}")
    return validate_flipword(tuple(int(char) for char in text))


def format_flipword(word: Iterable[int]) -> str:
    """Render a flip word as a digit string."""
    return "".join(str(label) for label in word)


def addresses_at_depth(depth: int) -> Iterator[TreeAddress]:
    """Yield the 2**depth addresses of one level, top to bottom (all-Right first)."""
    if depth < 0:
        raise ValueError(f"Depth must be non-negative, got {depth}")
    yield from itertools.product((Step.RIGHT, Step.LEFT), repeat=depth)


def addresses_to_depth(depth: int) -> Iterator[TreeAddress]:
    """Yield every address of depth at most ``depth`` in level order."""
    for level in range(depth + 1):
        yield from addresses_at_depth(level)
