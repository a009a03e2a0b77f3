import pytest

from sdstab.families import build, parse_family


@pytest.fixture
def fam():
    """Build a graph from a family expression."""
    return lambda text: build(parse_family(text))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
