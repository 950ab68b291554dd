import re

import pytest

from graphpoly.limits import LIMITS
from graphpoly.tutte import TUTTE_CACHE

_CRITERIA = {}


@pytest.fixture(autouse=True)
def _restore_limits():
    saved = vars(LIMITS).copy()
    yield
    for k, v in saved.items():
        setattr(LIMITS, k, v)


@pytest.fixture
def cold_cache():
    TUTTE_CACHE.clear()
    yield
    TUTTE_CACHE.clear()


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_ac(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    failed = report.failed
    if report.when == "call" or failed:
        _CRITERIA[key] = _CRITERIA.get(key, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), ok in sorted(_CRITERIA.items()):
        terminalreporter.write_line(f"criterion {num:2d} {name:<32} {'PASS' if ok else 'FAIL'}")
