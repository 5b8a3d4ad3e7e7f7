"""Exact reduced fractions over unbounded integers, including 1/0 for infinity."""

import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any

from ..errors import BothZeroError, InvalidRatioError, NotNeighborsError

_RATIO_RE = re.compile(r"^\s*(-?\d+)/(\d+)\s*$")


@functools.total_ordering
@dataclass(frozen=True)
class Ratio:
    """Reduced expression n/d of an element of Q ∪ {∞}.

    The sign is carried by ``num`` and ``den`` is never negative, so equal
    values always have equal fields. ``1/0`` is the only representation of
    infinity and compares greater than every finite value.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0:
            raise InvalidRatioError(f"Denominator must be non-negative: {self.num}/{self.den}")
        if self.num == 0 and self.den == 0:
            raise InvalidRatioError("0/0 is not a ratio")
        if gcd(self.num, self.den) != 1:
            raise InvalidRatioError(f"{self.num}/{self.den} is not reduced")

    @property
    def is_infinite(self) -> bool:
        """Whether this is 1/0."""
        return self.den == 0

    def __lt__(self, other: Any) -> bool:
        if not isinstance(other, Ratio):
            return NotImplemented
        if self.is_infinite:
            return False
        if other.is_infinite:
            return True
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def to_fraction(self) -> Fraction:
        """Convert a finite ratio to a :class:`fractions.Fraction`."""
        if self.is_infinite:
            raise InvalidRatioError("1/0 has no Fraction equivalent")
        return Fraction(self.num, self.den)

    @classmethod
    def parse(cls, text: str, reduced_only: bool = False) -> "Ratio":
        """Parse the textual form ``n/d`` (for example ``3/2``, ``1/0``, ``-1/1``).

        Args:
            text: Fraction string; the denominator carries no sign
            reduced_only: Reject text such as ``2/4`` instead of reducing it

        Returns:
            The reduced Ratio equal to n/d
        """
        match = _RATIO_RE.match(text)
        if match is None:
            raise InvalidRatioError(f"Expected a fraction of the form n/d, got {text!r}")
        n, d = int(match.group(1)), int(match.group(2))
        if reduced_only:
            return cls(n, d)
        return reduce(n, d)


ZERO = Ratio(0, 1)
ONE = Ratio(1, 1)
INFINITY = Ratio(1, 0)
MINUS_ONE = Ratio(-1, 1)


def reduce(n: int, d: int) -> Ratio:
    """Return the reduced expression of n/d, moving the sign to the numerator."""
    if n == 0 and d == 0:
        raise BothZeroError("Cannot reduce 0/0")
    g = gcd(n, d)
    n, d = n // g, d // g
    if d < 0:
        n, d = -n, -d
    if d == 0:
        n = 1
    return Ratio(n, d)


def cross_det(x: Ratio, y: Ratio) -> int:
    """Determinant x.num * y.den - y.num * x.den of the two lattice vectors."""
    return x.num * y.den - y.num * x.den


def _require_neighbors(x: Ratio, y: Ratio) -> None:
    if abs(cross_det(x, y)) != 1:
        raise NotNeighborsError(f"{x} and {y} are not Farey neighbors")


def mediant(x: Ratio, y: Ratio) -> Ratio:
    """Return (x.num + y.num)/(x.den + y.den) for Farey neighbors x and y.

    The sum of two unimodular vectors is primitive, so no reduction happens.
    """
    _require_neighbors(x, y)
    return Ratio(x.num + y.num, x.den + y.den)


def farey_difference(x: Ratio, y: Ratio) -> Ratio:
    """Return the reduced expression of (y.num - x.num)/(y.den - x.den).

    Symmetric in its arguments because reduction normalizes the sign.
    """
    _require_neighbors(x, y)
    return reduce(y.num - x.num, y.den - x.den)
