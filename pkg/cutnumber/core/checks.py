"""
Named checks collected while a certificate is assembled.

A certificate runs every check first and only then decides; failures are reported by name.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional

from cutnumber.utils.errors import CheckFailedError
from cutnumber.utils.logger import get_logger

logger = get_logger("checks")


class CheckStatus(Enum):
    """Outcome of a single named check."""

    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"  # Not applicable to these parameters


@dataclass(frozen=True)
class Check:
    """A named boolean fact with an optional explanation."""

    name: str
    status: CheckStatus
    detail: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED


class Checklist:
    """
    Ordered container of named checks.

    Adding a check under an existing name replaces it in place.
    """

    def __init__(self, checks: Optional[List[Check]] = None) -> None:
        """
        Initialize a checklist.

        Args:
            checks: Initial checks (optional)
        """
        self.checks: Dict[str, Check] = {}
        for check in checks or []:
            self.add(check)

    def add(self, check: Check, log_failure: bool = True) -> Check:
        self.checks[check.name] = check
        if check.status is CheckStatus.FAILED and log_failure:
            suffix = f": {check.detail}" if check.detail else ""
            logger.error(f"Check '{check.name}' failed{suffix}")
        else:
            logger.debug(f"Check '{check.name}' {check.status.value}")
        return check

    def record(
        self, name: str, passed: bool, detail: Optional[str] = None, log_failure: bool = True
    ) -> bool:
        """
        Record a boolean outcome.

        Args:
            name: Check name
            passed: Whether the check holds
            detail: Explanation (optional)
            log_failure: Log a failure at ERROR level; off for facts that may legitimately
                be false

        Returns:
            ``passed``
        """
        status = CheckStatus.PASSED if passed else CheckStatus.FAILED
        self.add(Check(name, status, detail), log_failure)
        return passed

    def skip(self, name: str, detail: Optional[str] = None) -> None:
        self.add(Check(name, CheckStatus.SKIPPED, detail))

    def get(self, name: str) -> Optional[Check]:
        return self.checks.get(name)

    def passed(self, *names: str) -> bool:
        """Check that every named check exists and passed; skipped checks do not count."""
        return all(name in self.checks and self.checks[name].passed for name in names)

    def names(self) -> List[str]:
        return list(self.checks.keys())

    def failures(self) -> List[str]:
        return [c.name for c in self.checks.values() if c.status is CheckStatus.FAILED]

    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def raise_on_failure(self, message: str, error: type = CheckFailedError) -> None:
        """
        Raise if any check failed.

        Args:
            message: Error message prefix
            error: ``CheckFailedError`` subclass to raise

        Raises:
            CheckFailedError: Naming every failed check
        """
        failed = self.failures()
        if failed:
            raise error(f"{message}: {', '.join(failed)}", failed_checks=failed)

    def __iter__(self) -> Iterator[Check]:
        return iter(self.checks.values())

    def __len__(self) -> int:
        return len(self.checks)

    def __contains__(self, name: str) -> bool:
        return name in self.checks
