"""Best rational approximation by Stern-Brocot descent."""

import logging
from fractions import Fraction
from math import floor

from ..errors import OutOfDomainError
from .rational import Ratio, reduce

logger = logging.getLogger(__name__)


def parse_decimal(text: str) -> Fraction:
    """Parse a decimal string such as ``3.14159`` into its exact rational value.

    Args:
        text: Decimal, integer or ``n/d`` text; exponents like ``1e-3`` are accepted

    Returns:
        The exact value as a Fraction
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise OutOfDomainError(f"Not an exact decimal value: {text!r}") from e


def best_approximation(target: Fraction, max_den: int) -> Ratio:
    """Return the reduced p/q with q <= max_den closest to ``target``.

    The descent keeps Farey neighbors lo < target < hi and moves toward the
    target through mediants until the next mediant's denominator exceeds
    ``max_den``. A run of mediants in one direction is taken in a single
    jump, so the number of passes follows the continued fraction of the
    target rather than ``max_den``. No fraction with a small enough
    denominator lies strictly between the final bounds, so the answer is one
    of them. Ties go to the smaller denominator, then to the lower bound.

    Args:
        target: Exact value to approximate
        max_den: Largest denominator allowed, at least 1

    Returns:
        The best approximation as a Ratio
    """
    if max_den < 1:
        raise OutOfDomainError(f"max_den must be at least 1, got {max_den}")

    base = floor(target)
    lo_num, lo_den = base, 1
    hi_num, hi_den = base + 1, 1
    if target == base:
        return reduce(base, 1)

    jumps = 0
    while True:
        # lo + k*hi stays at or below the target while k <= lo_gap/hi_gap
        lo_gap = target * lo_den - lo_num
        hi_gap = hi_num - target * hi_den
        k_lo = min(floor(lo_gap / hi_gap), (max_den - lo_den) // hi_den)
        if k_lo > 0:
            lo_num, lo_den = lo_num + k_lo * hi_num, lo_den + k_lo * hi_den
            jumps += 1
            if Fraction(lo_num, lo_den) == target:
                logger.debug(f"Exact hit {lo_num}/{lo_den} after {jumps} jumps")
                return reduce(lo_num, lo_den)
            lo_gap = target * lo_den - lo_num
        k_hi = min(floor(hi_gap / lo_gap), (max_den - hi_den) // lo_den)
        if k_hi > 0:
            hi_num, hi_den = hi_num + k_hi * lo_num, hi_den + k_hi * lo_den
            jumps += 1
            if Fraction(hi_num, hi_den) == target:
                logger.debug(f"Exact hit {hi_num}/{hi_den} after {jumps} jumps")
                return reduce(hi_num, hi_den)
        if k_lo <= 0 and k_hi <= 0:
            break

    lo_dist = target - Fraction(lo_num, lo_den)
    hi_dist = Fraction(hi_num, hi_den) - target
    logger.debug(
        f"Descent stopped after {jumps} jumps between {lo_num}/{lo_den} and {hi_num}/{hi_den}"
    )
    if hi_dist < lo_dist or (hi_dist == lo_dist and hi_den < lo_den):
        return reduce(hi_num, hi_den)
    return reduce(lo_num, lo_den)
