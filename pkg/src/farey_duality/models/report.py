"""Verification report models."""

import logging
from typing import Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

logger = logging.getLogger(__name__)


class Counterexample(BaseModel):
    """The first place where a verification suite found a mismatch."""

    location: str = Field(..., description="Address, flip word, fraction or word that failed")
    detail: str = Field(..., description="What was expected and what was found")

    model_config = ConfigDict(frozen=True)


class VerificationReport(BaseModel):
    """Outcome of one verification suite."""

    suite: str = Field(..., description="Suite name")
    passed: bool = Field(..., description="Whether every check held")
    checked: int = Field(default=0, ge=0, description="Number of checks performed")
    parameters: Dict[str, int] = Field(
        default_factory=dict, description="Depth, bound, sample count or seed used"
    )
    counterexample: Optional[Counterexample] = Field(
        default=None, description="First failure, when the suite did not pass"
    )

    model_config = ConfigDict(frozen=True)

    @classmethod
    def success(cls, suite: str, checked: int, **parameters: int) -> "VerificationReport":
        """Build a passing report."""
        logger.info(f"Suite {suite} passed {checked} checks with {parameters}")
        return cls(suite=suite, passed=True, checked=checked, parameters=parameters)

    @classmethod
    def failure(
        cls, suite: str, checked: int, location: str, detail: str, **parameters: int
    ) -> "VerificationReport":
        """Build a failing report carrying its counterexample."""
        logger.warning(f"Suite {suite} failed at {location or '(root)'}: {detail}")
        return cls(
            suite=suite,
            passed=False,
            checked=checked,
            parameters=parameters,
            counterexample=Counterexample(location=location, detail=detail),
        )

    def summary(self) -> str:
        """One-line human readable outcome."""
        if self.passed:
            return f"{self.suite}: PASS ({self.checked} checks)"
        assert self.counterexample is not None
        location = self.counterexample.location or "(root)"
        return f"{self.suite}: FAIL at {location}: {self.counterexample.detail}"


class ReportBuilder:
    """Counts checks for a running suite and produces its report."""

    def __init__(self, suite: str, **parameters: int) -> None:
        """Start a suite run.

        Args:
            suite: Suite name
            **parameters: Depth, bound, sample count or seed, echoed in the report
        """
        self.suite = suite
        self.parameters = parameters
        self.checked = 0
        logger.info(f"Running suite {suite} with {parameters}")

    def tick(self, count: int = 1) -> None:
        self.checked += count

    def fail(self, location: str, detail: str) -> VerificationReport:
        return VerificationReport.failure(
            self.suite, self.checked, location, detail, **self.parameters
        )

    def done(self) -> VerificationReport:
        return VerificationReport.success(self.suite, self.checked, **self.parameters)
