import numpy as np
import pytest

_ACCEPTANCE = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.add_marker(pytest.mark.acceptance)


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        crit = dict(report.user_properties).get("criterion")
        if crit is not None:
            _ACCEPTANCE[crit] = report.outcome


@pytest.fixture(autouse=True)
def _record_criterion(request):
    mark = request.node.get_closest_marker("criterion")
    if mark is not None:
        request.node.user_properties.append(("criterion", (mark.args[0], mark.args[1])))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (cid, text), outcome in sorted(_ACCEPTANCE.items(), key=lambda kv: _key(kv[0][0])):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {cid:>3}: {verdict}  {text}")


def _key(cid):
    digits = "".join(ch for ch in cid if ch.isdigit())
    return int(digits), cid


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
