"""Collects acceptance outcomes and prints one line per criterion at the end."""

import pytest

_CRITERIA: dict = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "known": []})
    if report.when == "call" or not report.passed:
        if hasattr(report, "wasxfail"):
            entry["ok"] = False
            entry["known"].append(report.wasxfail)
        elif not report.passed:
            entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        verdict = "PASS" if entry["ok"] else "FAIL"
        line = f"criterion {number:2d}: {verdict}  {entry['title']}"
        if entry["known"]:
            line += "  [known: " + "; ".join(dict.fromkeys(entry["known"])) + "]"
        terminalreporter.write_line(line)
