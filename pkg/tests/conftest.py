import pytest
from hypothesis import settings

from flagcodes.field import make_field

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(scope="session")
def F2():
    return make_field(2)


@pytest.fixture(scope="session")
def F3():
    return make_field(3)


@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2)


_CRITERIA = {}


def pytest_runtest_logreport(report):
    if "test_criterion_" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[name] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        outcome, secs = _CRITERIA[name]
        number = int(name.split("_")[2])
        terminalreporter.write_line(f"criterion {number:>2}: {outcome}  ({secs:.2f} s)  {name}")
