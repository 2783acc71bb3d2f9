import pytest

from cwecodes.field import FieldCtx

_FIELDS = {}


def field(p, e, modulus=None):
    key = (p, e, modulus)
    if key not in _FIELDS:
        _FIELDS[key] = FieldCtx(p, e, modulus)
    return _FIELDS[key]


@pytest.fixture
def f9():
    return field(3, 2)


@pytest.fixture
def f25():
    return field(5, 2)


@pytest.fixture
def f81():
    return field(3, 4)


# (criterion number, line) pairs, one per acceptance criterion, shown at the end of the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
