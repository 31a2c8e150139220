"""Collects the outcome of every acceptance criterion and prints one line each."""

import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    if report.when == "setup" and report.passed:
        return
    _criteria[number] = (title, report.passed, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, passed, seconds = _criteria[number]
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  criterion {number}: {title}  ({seconds:.1f} s)"
        )
