import pathlib

import pytest

DATA_DIR = pathlib.Path(__file__).parent / "data"

_acceptance_results = {}


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA_DIR


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance_results[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    # one pass/fail line per acceptance criterion
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_results):
        name = nodeid.split("::")[-1]
        outcome = _acceptance_results[nodeid].upper()
        terminalreporter.write_line(f"{name}: {outcome}")
