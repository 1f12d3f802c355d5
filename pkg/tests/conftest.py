import cmath

import pytest

from czcs import ConstructionParams, build_set

EXAMPLE_BLOCKS = [[1, 2, 3], [4]]


def example_params(delta=3, **kw):
    return ConstructionParams(m=5, q=4, delta=delta, partition=EXAMPLE_BLOCKS, **kw)


@pytest.fixture(scope="session")
def example_family():
    return build_set(example_params(3))


def float_accf(u, v, tau, q):
    """Direct floating point evaluation of the aperiodic cross-correlation."""
    n = len(u)
    w = cmath.exp(2j * cmath.pi / q)
    if tau >= 0:
        return sum(w ** (u[i] - v[i + tau]) for i in range(max(n - tau, 0)))
    return sum(w ** (u[i - tau] - v[i]) for i in range(max(n + tau, 0)))


_criteria = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    _criteria[name] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")
