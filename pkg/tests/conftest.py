"""Shared fixtures plus the acceptance summary.

Every test in test_acceptance.py gets a one-line PASS/FAIL verdict printed
after the run, keyed by the first line of its docstring, so the checklist
can be read without scrolling through pytest output.
"""

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

_verdicts: dict[str, tuple[str, str]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if "test_acceptance" not in item.nodeid:
        return
    doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
    if rep.when == "call":
        _verdicts[item.nodeid] = ("PASS" if rep.passed else "FAIL", doc)
    elif rep.when == "setup" and rep.skipped:
        _verdicts[item.nodeid] = ("SKIP", doc)
    elif rep.when == "setup" and rep.failed:
        _verdicts[item.nodeid] = ("FAIL", doc)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_verdicts):
        verdict, doc = _verdicts[nodeid]
        terminalreporter.write_line(f"{verdict:<5} {doc}")
