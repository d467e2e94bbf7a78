from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check; falsy on failure.

    ``detail`` names the first offending input when the check fails.
    """

    ok: bool
    detail: str | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = CheckResult(True)


def fail(detail: str) -> CheckResult:
    return CheckResult(False, detail)
