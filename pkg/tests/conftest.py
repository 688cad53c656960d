"""Shared fixtures and the acceptance-criteria summary block.

Acceptance tests register one verdict per criterion through
record_criterion(); after the run pytest prints a single PASS/FAIL line
for each criterion, in order, so the whole contract can be read off the
terminal at a glance.
"""

import pytest

from diracbound import (
    BENCHMARK_C_PSEUDO,
    BENCHMARK_C_SPIN,
    SymmetryLimit,
    benchmark_params,
)

CRITERIA = [f"AC-{i}" for i in range(1, 11)]

_results: dict[str, tuple[str, str]] = {}


def record_criterion(name: str, passed: bool, detail: str) -> None:
    """Store the verdict for one acceptance criterion.

    Called by the acceptance tests right before their assert, so the
    summary shows the true outcome even when the assert fires.
    """
    _results[name] = ("PASS" if passed else "FAIL", detail)


@pytest.fixture(scope="session")
def params_h0():
    return benchmark_params(H=0.0)


@pytest.fixture(scope="session")
def params_h5():
    return benchmark_params(H=5.0)


@pytest.fixture(scope="session")
def spin_sym():
    return SymmetryLimit.spin(BENCHMARK_C_SPIN)


@pytest.fixture(scope="session")
def pseudo_sym():
    return SymmetryLimit.pseudospin(BENCHMARK_C_PSEUDO)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for name in CRITERIA:
        status, detail = _results.get(name, ("NOT RUN", "no verdict recorded"))
        tr.write_line(f"{name:<6} {status:<7} {detail}")
