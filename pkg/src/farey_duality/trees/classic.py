"""Stern-Brocot, Calkin-Wilf and Farey triple trees."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from ..arith.rational import INFINITY, ONE, ZERO, Ratio, cross_det, mediant
from ..arith.treewalk import Step, TreeAddress, validate_flipword
from ..errors import NotNeighborsError, OutOfDomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GradientTriple:
    """Three pairwise Farey-neighbor gradients, indexed 1, 2, 3."""

    g1: Ratio
    g2: Ratio
    g3: Ratio

    def __post_init__(self) -> None:
        for x, y in combinations(self.entries, 2):
            if abs(cross_det(x, y)) != 1:
                raise NotNeighborsError(f"Gradients {x} and {y} are not unimodular in {self}")

    def __str__(self) -> str:
        return f"({self.g1}, {self.g2}, {self.g3})"

    def __iter__(self) -> Iterator[Ratio]:
        return iter(self.entries)

    @property
    def entries(self) -> Tuple[Ratio, Ratio, Ratio]:
        return (self.g1, self.g2, self.g3)

    def entry(self, k: int) -> Ratio:
        """Return the gradient at 1-based position ``k``."""
        return self.entries[k - 1]

    def others(self, k: int) -> Tuple[Ratio, Ratio]:
        """Return the two gradients not at position ``k``, in index order."""
        rest = [g for index, g in enumerate(self.entries, start=1) if index != k]
        return rest[0], rest[1]

    def middle_index(self) -> int:
        """Return the position of the second-largest gradient (1/0 is the largest value)."""
        order = sorted(range(1, 4), key=self.entry)
        return order[1]

    def middle(self) -> Ratio:
        """The second-largest gradient."""
        return self.entry(self.middle_index())

    def replace(self, k: int, value: Ratio) -> "GradientTriple":
        """Return a copy with position ``k`` set to ``value``."""
        values = list(self.entries)
        values[k - 1] = value
        return GradientTriple(*values)


FAREY_ROOT = GradientTriple(ZERO, INFINITY, ONE)


def cw_node(addr: Sequence[Step]) -> Ratio:
    """Return the Calkin-Wilf tree value at ``addr``.

    The root is 1/1; a Left step sends x/y to x/(x+y) and a Right step sends
    it to (x+y)/y.
    """
    x, y = 1, 1
    for step in addr:
        if step is Step.LEFT:
            y = x + y
        else:
            x = x + y
    return Ratio(x, y)


def sb_node(addr: Sequence[Step]) -> Ratio:
    """Return the Stern-Brocot tree value at ``addr``.

    The value of a vertex is the mediant of its bounds, which start as
    (0/1, 1/0). A Left step lowers the upper bound to the value and a Right
    step raises the lower bound to it.
    """
    lo, hi = ZERO, INFINITY
    for step in addr:
        value = mediant(lo, hi)
        if step is Step.LEFT:
            hi = value
        else:
            lo = value
    return mediant(lo, hi)


def farey_triple_node(word: Sequence[int]) -> GradientTriple:
    """Return the Farey triple at the vertex named by a flip word.

    Each label k replaces entry k with the mediant of the other two entries.
    """
    triple = FAREY_ROOT
    for k in validate_flipword(word):
        triple = triple.replace(k, mediant(*triple.others(k)))
    return triple


def _require_positive(q: Ratio) -> None:
    if q.is_infinite or q.num <= 0:
        raise OutOfDomainError(f"Only finite positive fractions appear in the tree, got {q}")


def sb_locate(q: Ratio) -> TreeAddress:
    """Find the address of ``q`` in the Stern-Brocot tree by binary search.

    Args:
        q: Finite positive fraction

    Returns:
        The unique address whose value is ``q``
    """
    _require_positive(q)
    lo, hi = ZERO, INFINITY
    steps: List[Step] = []
    while True:
        value = mediant(lo, hi)
        if value == q:
            break
        if q < value:
            steps.append(Step.LEFT)
            hi = value
        else:
            steps.append(Step.RIGHT)
            lo = value
    logger.debug(f"Located {q} in the Stern-Brocot tree at depth {len(steps)}")
    return tuple(steps)


def cw_locate(q: Ratio) -> TreeAddress:
    """Find the address of ``q`` in the Calkin-Wilf tree.

    Runs the child rules backwards: x > y was reached by a Right step from
    (x-y)/y, x < y by a Left step from x/(y-x).

    Args:
        q: Finite positive fraction

    Returns:
        The unique address whose value is ``q``
    """
    _require_positive(q)
    x, y = q.num, q.den
    steps: List[Step] = []
    while (x, y) != (1, 1):
        if x > y:
            steps.append(Step.RIGHT)
            x -= y
        else:
            steps.append(Step.LEFT)
            y -= x
    steps.reverse()
    logger.debug(f"Located {q} in the Calkin-Wilf tree at depth {len(steps)}")
    return tuple(steps)
