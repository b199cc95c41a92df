import pytest
from hypothesis import settings

import _corpus

# compile-on-first-call and a single shared core make wall-clock deadlines noise
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")


@pytest.fixture
def worked():
    return _corpus.worked()


@pytest.fixture
def worked_po():
    return _corpus.worked_po()


@pytest.fixture(scope="session")
def corpus():
    return _corpus.agreement_corpus()


# --- acceptance reporting -------------------------------------------------
# Tests marked ``@pytest.mark.acceptance(k)`` get one summary line each.

_acceptance = {}


@pytest.fixture
def detail():
    """Free-text notes a criterion test wants shown next to its verdict."""
    return []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call" and not report.failed:
        return
    number = marker.args[0]
    notes = "; ".join(item.funcargs.get("detail", []) if hasattr(item, "funcargs") else [])
    if report.failed:
        _acceptance[number] = ("FAIL", notes or str(report.longrepr).splitlines()[-1])
    elif report.when == "call":
        _acceptance[number] = ("PASS", notes)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        verdict, notes = _acceptance[number]
        terminalreporter.write_line(f"ACCEPTANCE {number:>2} {verdict}  {notes}".rstrip())
