import itertools
from fractions import Fraction

import pytest

import ordsemi as o
from ordsemi.commute import words_universe

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fm():
    return o.free_monoid(2)


@pytest.fixture
def w(fm):
    """Parse words written as letter strings."""
    return fm.parse


@pytest.fixture
def U3(fm):
    return words_universe(fm, 3)


def shortlex_key(s: str):
    """Oracle order on words written as strings: length, then string order."""
    return (len(s), s)


def all_words(letters: str, max_len: int) -> list[str]:
    return ["".join(p) for n in range(max_len + 1) for p in itertools.product(letters, repeat=n)]


def zigzag_positions(n: int) -> list[tuple[int, int]]:
    """Oracle scan order: sort all upper-triangle positions by (j - i, j)."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i <= j]
    return sorted(cells, key=lambda p: (p[1] - p[0], p[1]))


def F(x):
    return Fraction(x)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
