"""Shared fixtures and the acceptance summary printed at the end of a run."""

import random

import pytest

CRITERIA = {
    1: "necessary-condition identity",
    2: "n=4 worked conditions",
    3: "Heun fixture solution",
    4: "Hermite fixture solution",
    5: "inverse square-root non-existence",
    6: "Dirac necessary condition",
    7: "Scheffe detection census",
    8: "two-term vs hypergeometric series",
    9: "oracle equivalence",
    10: "Cauchy-Euler grid",
    11: "classification census",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        ok = rep.passed
        _results[n] = _results.get(n, True) and ok


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n not in _results:
            status = "NOT RUN"
        else:
            status = "PASS" if _results[n] else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d}: {status:7s} {CRITERIA[n]}")


@pytest.fixture
def rng():
    return random.Random(20240611)
