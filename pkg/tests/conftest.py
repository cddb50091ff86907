import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oscsign.qexp import EtaQuotient, delta, eta_quotient_expansion, normalize  # noqa: E402

LEVEL11 = EtaQuotient(((1, 2), (11, 2)), 11)


@pytest.fixture(scope="session")
def tau_series():
    return delta(100_000)


@pytest.fixture(scope="session")
def tau_norm(tau_series):
    return normalize(tau_series, 12, name="delta")


@pytest.fixture(scope="session")
def level11_series():
    return eta_quotient_expansion(LEVEL11, 100_000)


@pytest.fixture(scope="session")
def level11_norm(level11_series):
    return normalize(level11_series, 2, name="11a")


_ACCEPTANCE: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome.upper()))
    elif report.when == "setup" and report.failed and "test_acceptance" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], "ERROR"))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{outcome:<7} {name}")
