"""Collects per-criterion outcomes from the acceptance module and prints a summary."""

from collections import defaultdict

import pytest

_outcomes: dict[int, list[str]] = defaultdict(list)
_titles: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion this test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    number, title = mark.args
    _titles[number] = title
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _outcomes[number].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_outcomes):
        results = _outcomes[number]
        ok = sum(r == "passed" for r in results)
        verdict = "PASS" if ok == len(results) else "FAIL"
        tr.write_line(f"[PRIMARY] criterion {number:>2}: {verdict}  ({ok}/{len(results)} checks)  {_titles[number]}")
