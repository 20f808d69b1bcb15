"""Prints the acceptance scorecard after any run that touched it."""

_DESCRIPTIONS = {}
_RESULTS = {}


def _criterion_number(name):
    return int(name.rsplit("_", 1)[-1])


def pytest_collection_modifyitems(items):
    for item in items:
        if item.name.startswith("test_criterion_"):
            doc = (item.function.__doc__ or "").strip().splitlines()
            _DESCRIPTIONS[item.name] = doc[0] if doc else ""


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    if report.when == "call" or report.failed:
        if _RESULTS.get(name) != "FAIL":
            _RESULTS[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance scorecard")
    for name in sorted(_RESULTS, key=_criterion_number):
        line = f"criterion {_criterion_number(name)}: {_RESULTS[name]}"
        desc = _DESCRIPTIONS.get(name, "")
        if desc:
            line += f" - {desc}"
        terminalreporter.write_line(line)
