from importlib.resources import files

import pytest

from dpbound.detector import load_setup

ACCEPTANCE_LINES = {}


@pytest.fixture(scope="session")
def synthetic_setup():
    return load_setup(files("dpbound") / "data" / "setup_synthetic.json")


@pytest.fixture
def record_criterion(request):
    """Call with (number, title, passed, detail); the line is echoed in the summary."""

    def record(number, title, passed, detail):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES[number] = f"[{status}] criterion {number:2d}: {title}: {detail}"
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
