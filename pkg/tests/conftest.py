"""Collects the outcome of every ``@pytest.mark.acceptance`` test and prints a
one-line PASS/FAIL summary per criterion at the end of the run."""

from __future__ import annotations

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "PASS" if report.passed else "FAIL"
        previous = _RESULTS.get(number, ("PASS", title))[0]
        _RESULTS[number] = ("FAIL" if "FAIL" in (status, previous) else "PASS", title)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title = _RESULTS[number]
        terminalreporter.write_line(f"{status} criterion {number:2d}: {title}")
