import pytest

from hilmod import kernels

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): exit criterion of the build")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    info = getattr(report, "acceptance", None)
    if info is None:
        return
    number, title = info
    prev = _ACCEPTANCE.get(number, (title, True))
    _ACCEPTANCE[number] = (title, prev[1] and report.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None:
        rep.acceptance = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


@pytest.fixture(params=sorted(kernels.IMPLEMENTATIONS))
def kernel_impl(request):
    """Run a test once per available kernel implementation."""
    previous = kernels.BACKEND
    kernels.use(request.param)
    yield request.param
    kernels.use(previous)
