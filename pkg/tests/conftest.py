import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


def pytest_runtest_logreport(report):
    crit = getattr(report, "_criterion", None)
    if crit is None:
        return
    num, title = crit
    entry = _criteria.setdefault(num, {"title": title, "outcome": "PASS"})
    if report.failed:
        entry["outcome"] = "FAIL"
    elif report.skipped and entry["outcome"] == "PASS" and report.when in ("setup", "call"):
        entry["outcome"] = "SKIP"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (str(m.args[0]), m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=lambda s: int(s)):
        e = _criteria[num]
        terminalreporter.write_line(f"[{e['outcome']}] criterion {num}: {e['title']}")
