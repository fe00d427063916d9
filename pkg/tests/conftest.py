"""Shared test infrastructure.

Acceptance tests register a one-line verdict through record_acceptance();
the pytest_terminal_summary hook prints the collected lines at the end of
the run so the verdict table appears in captured output even when all
tests pass.
"""

from __future__ import annotations

import time

_ACCEPTANCE_LINES: list[tuple[str, bool, str]] = []


def record_acceptance(criterion: str, passed: bool, detail: str) -> None:
    _ACCEPTANCE_LINES.append((criterion, passed, detail))


class AcceptanceTimer:
    """Context manager capturing wall time for a criterion's detail line."""

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0
        return False


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_LINES:
        return
    tr = terminalreporter
    tr.ensure_newline()
    tr.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE_LINES:
        verdict = "PASS" if passed else "FAIL"
        tr.line(f"{criterion:<12} {verdict}  {detail}")
    passed_n = sum(1 for _, ok, _ in _ACCEPTANCE_LINES if ok)
    tr.line(f"{passed_n}/{len(_ACCEPTANCE_LINES)} acceptance checks green")
