import re

_CRITERIA = {}
_NAME = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)$")


def pytest_runtest_logreport(report):
    match = _NAME.search(report.nodeid)
    if not match:
        return
    num, name = int(match.group(1)), match.group(2)
    if report.when == "call" or report.failed or report.skipped:
        prev = _CRITERIA.get(num, (name, "PASS"))[1]
        status = "PASS" if report.passed and prev == "PASS" else "FAIL"
        if report.skipped:
            status = "SKIP"
        _CRITERIA[num] = (name, status)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        name, status = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num} [{name.replace('_', ' ')}]: {status}")
