"""Verification suites."""

from .suites import SUITES, SuiteName, SuiteOptions, random_flipword, resolve_options, run_suite

__all__ = ["SUITES", "SuiteName", "SuiteOptions", "random_flipword", "resolve_options", "run_suite"]
