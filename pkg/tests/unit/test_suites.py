"""Unit tests for the verification suites."""

import random

import pytest

from farey_duality.arith.treewalk import validate_flipword
from farey_duality.config.manager import AppConfig
from farey_duality.verify.suites import (
    SuiteName,
    SuiteOptions,
    random_flipword,
    resolve_options,
    run_suite,
)

SMALL = SuiteOptions(depth=6, bound=8, samples=20, max_length=8, seed=1)


@pytest.mark.parametrize("suite", list(SuiteName))
def test_suite_passes_at_small_size(suite: SuiteName) -> None:
    """Test every suite passes on a small run."""
    report = run_suite(suite, SMALL)

    assert report.passed, report.summary()
    assert report.suite == suite.value
    assert report.checked > 0
    assert report.summary().startswith(f"{suite.value}: PASS")


def test_closure_suite() -> None:
    """Test the closure suite reports its length bound."""
    report = run_suite(SuiteName.CLOSURE, SMALL.model_copy(update={"bound": 16}))

    assert report.passed
    assert report.parameters == {"bound": 16}


def test_random_flipword_is_valid() -> None:
    """Test random flip words never repeat a label or start with 3."""
    rng = random.Random(5)
    for length in range(12):
        word = random_flipword(rng, length)
        assert len(word) == length
        assert validate_flipword(word) == word


def test_random_flipword_is_seeded() -> None:
    """Test the same seed gives the same words."""
    first = [random_flipword(random.Random(9), 10) for _ in range(3)]
    second = [random_flipword(random.Random(9), 10) for _ in range(3)]

    assert first == second


def test_resolve_options_uses_configuration() -> None:
    """Test sizes fall back to the configuration per suite."""
    config = AppConfig(cluster_depth=9, word_depth=4, det_bound=7, closure_bound=11, seed=2)

    assert resolve_options(SuiteName.MAIN1, config).depth == 9
    assert resolve_options(SuiteName.COHN, config).depth == 4
    assert resolve_options(SuiteName.DET, config).bound == 7
    assert resolve_options(SuiteName.CLOSURE, config).bound == 11
    assert resolve_options(SuiteName.DUALITY, config).seed == 2


def test_resolve_options_prefers_explicit_values() -> None:
    """Test explicit sizes override the configuration."""
    options = resolve_options(SuiteName.DET, AppConfig(), depth=3, bound=5, samples=4, seed=8)

    assert options == SuiteOptions(depth=3, bound=5, samples=4, max_length=20, seed=8)
