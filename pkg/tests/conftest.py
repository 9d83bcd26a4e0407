"""Pytest hooks that echo the acceptance checks as one line each.

Tests marked with the `criterion` decorator from test_acceptance.py get a
PASS/FAIL line in a dedicated terminal section after the run, so the
acceptance verdicts are readable without scanning the full test output.
"""

import pytest


def pytest_configure(config):
    config._criterion_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    label = getattr(getattr(item, "function", None), "_criterion", None)
    if label is None:
        return
    lines = item.config._criterion_lines
    if rep.when == "call":
        lines.append((label, rep.passed, rep.duration))
    elif rep.when == "setup" and rep.outcome != "passed":
        lines.append((label, False, rep.duration))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_criterion_lines", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, seconds in lines:
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line("%s  %s  (%.2fs)" % (verdict, label, seconds))
