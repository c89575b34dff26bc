"""Shared reporting for the acceptance battery."""

import pytest

_lines = []


@pytest.fixture(scope="session")
def criterion():
    """Record one pass/fail line per acceptance criterion and enforce it."""

    def _record(num: int, ok: bool, text: str) -> None:
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {text}"
        _lines.append(line)
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)
