"""Brute-force crossing counts on the universal cover of the punctured torus.

Punctures lift to the integer lattice. An arc of gradient p/q lifts to a
segment from a lattice point B to B + (q, p); the arcs of gradient r/s lift
to every line r*x - s*y = c through a lattice point. Counting the lines that
cross the open segment away from lattice points gives the intersection number
without using any closed form.
"""

import logging
import random
from dataclasses import dataclass
from math import gcd
from typing import Iterator, List, Tuple

from ..arith.rational import MINUS_ONE, Ratio, cross_det, reduce
from ..errors import NotPrimitiveError
from ..models.report import ReportBuilder, VerificationReport
from ..trees.cluster import grad_to_ivec, initial_gradients

logger = logging.getLogger(__name__)

LatticePoint = Tuple[int, int]


@dataclass(frozen=True)
class Segment:
    """Lift of an arc: the segment from the origin to a primitive lattice point (x, y)."""

    x: int
    y: int

    def __post_init__(self) -> None:
        if self.x < 0:
            raise NotPrimitiveError(f"Endpoint must have x >= 0: ({self.x}, {self.y})")
        if gcd(self.x, self.y) != 1:
            raise NotPrimitiveError(
                f"Segment to ({self.x}, {self.y}) has an interior lattice point"
            )

    @classmethod
    def from_ratio(cls, g: Ratio) -> "Segment":
        """Lift the arc with gradient p/q to the segment ending at (q, p)."""
        return cls(g.den, g.num)

    @property
    def gradient(self) -> Ratio:
        return reduce(self.y, self.x)


def crossed_lines(arc: Segment, family: Ratio, base: LatticePoint = (0, 0)) -> Iterator[int]:
    """Yield the offset c of every line r*X - s*Y = c that the lifted arc crosses.

    The arc is lifted to the segment from the lattice point ``base`` to
    ``base + (x, y)``. Offsets are absolute, so moving the base moves the
    lines that are met. A line met at a lattice point is a meeting at the
    puncture and is skipped.
    """
    r, s = family.num, family.den
    bx, by = base
    start = r * bx - s * by
    span = r * arc.x - s * arc.y
    end = start + span
    for c in range(min(start, end) + 1, max(start, end)):
        # meeting point is base + (c - start)/span * (x, y)
        px = bx * span + (c - start) * arc.x
        py = by * span + (c - start) * arc.y
        if px % span == 0 and py % span == 0:
            continue
        yield c


def crossing_count(arc: Segment, family: Ratio, base: LatticePoint = (0, 0)) -> int:
    """Count crossings of ``arc`` with the lattice lines of gradient ``family``.

    Args:
        arc: Lifted arc
        family: Gradient r/s of the crossing family
        base: Lattice point the arc's lift starts from

    Returns:
        Number of transversal crossings, or -1 when the arc has gradient ``family``
    """
    if family.num * arc.x - family.den * arc.y == 0:
        return -1
    return sum(1 for _ in crossed_lines(arc, family, base))


def _reduced_gradients(bound: int) -> List[Ratio]:
    """Reduced p/q with p, q >= 0 and p + q <= bound."""
    return [
        Ratio(p, total - p)
        for total in range(1, bound + 1)
        for p in range(total + 1)
        if gcd(p, total - p) == 1
    ]


def verify_int_inc(bound: int) -> VerificationReport:
    """Compare oracle crossing counts against [p-1, q-1, p+q-1] for every p + q <= bound."""
    run = ReportBuilder("int-inc", bound=bound)
    initial = initial_gradients()
    for g in _reduced_gradients(bound):
        segment = Segment.from_ratio(g)
        counted = [crossing_count(segment, e) for e in initial]
        expected = grad_to_ivec(g).to_list()
        run.tick()
        if counted != expected:
            return run.fail(str(g), f"oracle counted {counted}, closed form gives {expected}")
    return run.done()


def verify_det(bound: int, samples: int = 50, seed: int = 0) -> VerificationReport:
    """Check the determinant law, symmetry and translation invariance of crossing counts.

    Arcs range over reduced p/q with 0 <= p, q <= bound; families over the same
    set plus -1/1.

    Args:
        bound: Largest numerator or denominator
        samples: Number of random pairs for the translation check
        seed: Seed for choosing those pairs and their base points
    """
    run = ReportBuilder("det", bound=bound, samples=samples, seed=seed)
    arcs = [
        Ratio(p, q)
        for p in range(bound + 1)
        for q in range(bound + 1)
        if gcd(p, q) == 1
    ]
    families = arcs + [MINUS_ONE]

    for g in arcs:
        segment = Segment.from_ratio(g)
        for e in families:
            counted = crossing_count(segment, e)
            expected = abs(cross_det(g, e)) - 1
            run.tick()
            if counted != expected:
                return run.fail(
                    f"{g} x {e}", f"oracle counted {counted}, determinant gives {expected}"
                )
            swapped = crossing_count(Segment.from_ratio(e), g)
            run.tick()
            if swapped != counted:
                return run.fail(f"{g} x {e}", f"counts {counted} and {swapped} are not symmetric")

    rng = random.Random(seed)
    for _ in range(samples):
        g, e = rng.choice(arcs), rng.choice(families)
        base = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        shifted = crossing_count(Segment.from_ratio(g), e, base)
        run.tick()
        if shifted != crossing_count(Segment.from_ratio(g), e):
            return run.fail(f"{g} x {e}", f"count changes when the family is based at {base}")
    return run.done()
