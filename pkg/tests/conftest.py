import random

import pytest

from skeinlab.diagrams import borromean_fixture, hopf_fixture, unknot_fixture


@pytest.fixture
def rng():
    return random.Random(97531)


@pytest.fixture
def borromean():
    return borromean_fixture()


@pytest.fixture
def hopf():
    return hopf_fixture()


@pytest.fixture
def unknot():
    return unknot_fixture(0)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion at the end of the run."""
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            name = report.nodeid.rsplit("::", 1)[-1]
            if name.startswith("test_criterion_") and report.when == "call":
                outcomes[name] = "PASS" if status == "passed" else "FAIL"
    if not outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria")
    for name in sorted(outcomes):
        label = name.replace("test_criterion_", "").replace("_", " ")
        terminalreporter.write_line(f"  {label}: {outcomes[name]}")
