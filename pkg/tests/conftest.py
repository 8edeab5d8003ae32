import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kfacets import PointSet  # noqa: E402

_criteria = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion for the end-of-run summary."""
    label = request.node.get_closest_marker("criterion").args[0]
    _criteria[label] = None
    yield label


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and report.when == "call":
        _criteria[marker.args[0]] = report.passed
    elif marker and report.when == "setup" and not report.passed:
        _criteria[marker.args[0]] = False


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0].rstrip("."))):
        state = _criteria[label]
        word = "PASS" if state else ("FAIL" if state is False else "NOT RUN")
        terminalreporter.write_line(f"{word}  {label}")


@pytest.fixture
def triangle():
    return PointSet([(0, 0), (4, 0), (0, 4)])


@pytest.fixture
def square():
    return PointSet([(0, 0), (2, 0), (2, 2), (0, 2)])


@pytest.fixture
def convex4():
    return PointSet([(0, 0), (3, 0), (4, 3), (0, 4)])


@pytest.fixture
def convex5():
    return PointSet([(0, 0), (4, 0), (6, 3), (2, 6), (-2, 3)])


@pytest.fixture
def tri_plus_inner():
    return PointSet([(0, 0), (6, 0), (0, 6), (1, 2)])
