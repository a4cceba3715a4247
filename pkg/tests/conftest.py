from __future__ import annotations

import pytest

from libdex.builtin import builtin_catalog
from libdex.reference import example_profiles, reference_weights


@pytest.fixture(scope="session")
def catalog():
    return builtin_catalog()


@pytest.fixture(scope="session")
def ref_weights():
    return reference_weights()[0]


@pytest.fixture(scope="session")
def ref_trace():
    return reference_weights()[1]


@pytest.fixture(scope="session")
def bouncy_castle():
    return example_profiles()[0]


@pytest.fixture(scope="session")
def tink():
    return example_profiles()[1]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    lines = []
    for outcome, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            if getattr(report, "when", "call") != "call" and outcome != "error":
                continue
            if "test_acceptance.py" in report.nodeid:
                name = report.nodeid.split("::")[-1]
                lines.append((name, label))
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for name, label in sorted(lines):
            terminalreporter.write_line(f"[{label}] {name}")
