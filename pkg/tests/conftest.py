from pathlib import Path

import pytest

from protoalg import fixtures as fx
from protoalg.search import SearchSpec, enumerate_frames

ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture
def e32():
    return fx.e32()


@pytest.fixture
def e33():
    return fx.e33()


@pytest.fixture
def e34():
    return fx.e34()


@pytest.fixture
def bool2():
    return fx.bool2()


@pytest.fixture
def gz3():
    return fx.gz3()


@pytest.fixture
def triv1():
    return fx.triv1()


def _frames(shapes, **filters):
    out = []
    for n, k in shapes:
        out.extend(enumerate_frames(SearchSpec(n, k, **filters)))
    return out


SMALL_SHAPES = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)]


@pytest.fixture(scope="session")
def small_frames():
    """Every protomodular frame with n=1, size<=3 or n=2, size<=2."""
    return _frames(SMALL_SHAPES)


@pytest.fixture(scope="session")
def small_rc_frames():
    return _frames(SMALL_SHAPES, required={"right-cancellable"})


@pytest.fixture(scope="session")
def rc_fixture_frames():
    return {name: f for name, f in fx.all_fixtures().items() if name not in ("bool2", "loop6")}


# -- acceptance reporting --------------------------------------------------

_acceptance_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance_results.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, outcome in sorted(_acceptance_results):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {text}")
