"""Shared hooks: a PASS/FAIL line per headline guarantee.

Tests in test_acceptance.py each cover one externally visible guarantee.
After any run that includes them, the terminal summary lists every
guarantee with its outcome so the whole contract is auditable at a
glance.
"""

from __future__ import annotations

ACCEPTANCE_FILE = "test_acceptance.py"

_labels: dict[str, str] = {}
_outcomes: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        if item.path.name != ACCEPTANCE_FILE:
            continue
        doc = item.obj.__doc__
        label = doc.strip().splitlines()[0].rstrip(".") if doc else item.name
        _labels[item.nodeid] = label


def pytest_runtest_logreport(report):
    if report.nodeid not in _labels:
        return
    #  any failed phase (setup/call/teardown) marks the criterion failed
    if report.failed:
        _outcomes[report.nodeid] = "FAIL"
    elif report.when == "call" and report.nodeid not in _outcomes:
        _outcomes[report.nodeid] = "SKIP" if report.skipped else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _labels:
        return
    terminalreporter.ensure_newline()
    terminalreporter.section("acceptance criteria", sep="-")
    for nodeid, label in _labels.items():
        outcome = _outcomes.get(nodeid, "SKIP")
        terminalreporter.write_line(f"{outcome:4s}  {label}")
