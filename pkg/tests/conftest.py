import pytest

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        details = [v for k, v in item.user_properties if k == "detail"]
        _ACCEPTANCE[marker.args[0]] = (report.passed, details)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        passed, details = _ACCEPTANCE[name]
        line = f"{'PASS' if passed else 'FAIL'}  {name}"
        if details:
            line += "  [" + "; ".join(details) + "]"
        terminalreporter.write_line(line)
