import time
from contextlib import contextmanager

import pytest

_ACCEPTANCE = []


class Criterion:
    def __init__(self, label, budget):
        self.label = label
        self.budget = budget
        self.ok = False
        self.detail = ""
        self.elapsed = 0.0


@contextmanager
def _criterion(label, budget):
    crit = Criterion(label, budget)
    _ACCEPTANCE.append(crit)
    start = time.perf_counter()
    try:
        yield crit
    finally:
        crit.elapsed = time.perf_counter() - start
        if crit.elapsed >= budget:
            crit.ok = False
            crit.detail += f" over budget {budget:g}s"
    assert crit.elapsed < budget, f"{label}: {crit.elapsed:.2f}s exceeds {budget:g}s"


@pytest.fixture
def criterion():
    """Context manager: ``with criterion(label, seconds) as c: ...; c.ok = True``."""
    return _criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in _ACCEPTANCE:
        status = "PASS" if crit.ok else "FAIL"
        terminalreporter.write_line(
            f"{status} {crit.label} ({crit.elapsed:.2f}s / {crit.budget:g}s){crit.detail}"
        )
