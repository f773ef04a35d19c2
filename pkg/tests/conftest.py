import pytest
from hypothesis import strategies as st

from thompson.treepair import enumerate_elements
from thompson.words import GroupWord


@pytest.fixture(scope="session")
def ball5():
    return enumerate_elements(2, 5)


@pytest.fixture(scope="session")
def ball6():
    return enumerate_elements(2, 6)


def letters(names, max_exp=2):
    return st.tuples(st.sampled_from(names), st.integers(-max_exp, max_exp).filter(bool))


def words(names=("x0", "x1", "x2", "c0", "c1", "c2", "c3"), max_len=6):
    return st.lists(letters(names), max_size=max_len).map(lambda ls: GroupWord(tuple(ls)))


def gc_words(max_index=4, max_len=12):
    names = [f"g{k}" for k in range(1, max_index + 1)] + [f"c{2 * k}" for k in range(max_index // 2 + 1)]
    return words(tuple(names), max_len)


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
