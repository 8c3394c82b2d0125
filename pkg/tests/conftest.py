import pytest

_RESULTS = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when == "teardown" and not rep.failed:
        return
    n, title = mark.args
    _, ok, seconds = _RESULTS.get(n, (title, True, 0.0))
    # setup time counts too: the census fixtures are where criterion 7 spends it
    _RESULTS[n] = (title, ok and not rep.failed, seconds + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_RESULTS):
        title, ok, seconds = _RESULTS[n]
        terminalreporter.write_line(
            f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.2f} s)")
