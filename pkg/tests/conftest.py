import pytest

from cbck.enumerate import si_tree_keys_upto
from cbck.iso import algebra_from_key

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def keys_upto_9():
    return si_tree_keys_upto(9)


@pytest.fixture(scope="session")
def algebras_upto_9(keys_upto_9):
    return [algebra_from_key(k) for k in keys_upto_9]


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
