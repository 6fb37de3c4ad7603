import pytest

_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion under a label."""

    def record(label):
        _CRITERIA[request.node.nodeid] = [label, None, ""]
        return _CRITERIA[request.node.nodeid]

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    entry = _CRITERIA.get(item.nodeid)
    if entry is not None and report.when == "call":
        entry[1] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, status, note in sorted(_CRITERIA.values(), key=lambda e: int(e[0].split()[0])):
        line = f"{status or 'NOT RUN'}: criterion {label}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)
