import pytest

from tbi.corpus import brown_like_spec, generate_vocabulary

_criteria: dict[str, tuple[int, str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "_criterion", None)
    if marker is not None:
        name = report.nodeid.rsplit("::", 1)[-1]
        _criteria[report.nodeid] = (marker[0], marker[1], name, report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        report._criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, name, outcome in sorted(_criteria.values()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {number}: {title} ({name})")


@pytest.fixture(scope="session")
def toy_vocab():
    return ["google", "llc", "google llc"]


@pytest.fixture(scope="session")
def brown_2k():
    return generate_vocabulary(brown_like_spec(2000, seed=11))
