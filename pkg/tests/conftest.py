"""Acceptance bookkeeping: one pass/fail line per criterion in the summary."""

import pytest

_criteria = {}
_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _criteria[item.nodeid] = (number, title)


def pytest_runtest_logreport(report):
    key = _criteria.get(report.nodeid)
    if key is None:
        return
    if report.failed:
        _outcomes[key] = False
    elif report.when == "call":
        _outcomes.setdefault(key, True)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(_outcomes.items()):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
