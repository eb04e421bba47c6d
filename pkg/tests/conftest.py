import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


# One summary line per acceptance criterion, printed after the run.
_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        if "test_acceptance.py" in report.nodeid:
            name = report.nodeid.split("::")[-1].split("[")[0]
            # parametrized cases roll up into their criterion; any failure wins
            if _acceptance.get(name) != "failed":
                _acceptance[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        mark = "PASS" if outcome == "passed" else "FAIL"
        criterion = name.split("_")[1].upper() if name.startswith("test_ac") else name
        terminalreporter.write_line(f"[{mark}] {criterion} {name}")
