"""Acceptance reporting: one PASS/FAIL line per criterion.

The acceptance tests are named ``test_criterion_<N>_*``.  Their status is
collected from the logreport hook and printed as a summary block, which
stays visible under pytest's default fd-level capture (prints made inside
the test call itself would be swallowed on success).
"""

import re

_CRITERION = re.compile(r"test_criterion_(\d+)")

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    match = _CRITERION.search(report.nodeid)
    if match is None:
        return
    if report.passed:
        status = "PASS"
    elif report.skipped:
        status = "SKIP"
    else:
        status = "FAIL"
    _results[int(match.group(1))] = (status, report.duration)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_results):
        status, duration = _results[num]
        terminalreporter.write_line(f"[criterion {num}] {status} ({duration:.2f}s)")
