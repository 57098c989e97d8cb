"""Shared pytest configuration: collects acceptance verdicts and prints them at the end of the run."""

import pytest

_RESULTS: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool) -> None:
        _RESULTS[number] = (ok, title)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}")
    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        ok, title = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title}")
