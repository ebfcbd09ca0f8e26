"""Shared pytest hooks."""

from util import ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    """Print one verdict line per acceptance criterion at the end of the run."""
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)
