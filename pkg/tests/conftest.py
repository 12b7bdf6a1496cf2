import pytest

from proplist import BackendKind, make_backend

ALL_KINDS = list(BackendKind)


@pytest.fixture(params=ALL_KINDS, ids=[k.value for k in ALL_KINDS])
def kind(request):
    return request.param


@pytest.fixture
def plist(kind):
    return make_backend(kind)


ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    """Collect one summary line per acceptance criterion."""
    def add(criterion, passed, detail):
        status = passed if isinstance(passed, str) else ("PASS" if passed else "FAIL")
        ACCEPTANCE_LINES.append(f"[{status}] criterion {criterion}: {detail}")
    return add


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
