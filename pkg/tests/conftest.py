import pytest

_criteria: dict[str, tuple[int, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _criteria[item.nodeid] = (mark.args[0], mark.args[1], "NOT RUN")


def pytest_runtest_logreport(report):
    if report.nodeid not in _criteria:
        return
    n, title, state = _criteria[report.nodeid]
    if report.failed:
        state = "FAIL"
    elif report.when == "call" and state == "NOT RUN":
        state = "PASS"
    _criteria[report.nodeid] = (n, title, state)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, state in sorted(_criteria.values()):
        terminalreporter.write_line(f"AC{n:<2} {state:<7} {title}")
