import re

import pytest
from hypothesis import settings

from evidential import fixtures

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

_criteria: dict[int, tuple[str, str]] = {}


@pytest.fixture(scope="session")
def coinflip():
    return fixtures.coinflip()


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if m:
        _criteria[int(m.group(1))] = (m.group(2), report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        name, outcome = _criteria[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} ({name}): {status}")
