"""Geometric brute force on the universal cover."""

from .oracle import Segment, crossed_lines, crossing_count, verify_det, verify_int_inc

__all__ = ["Segment", "crossed_lines", "crossing_count", "verify_det", "verify_int_inc"]
