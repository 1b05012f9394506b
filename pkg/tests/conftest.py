from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from assortativity.matrix import MatchingMatrix

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def rationals(min_num=0, max_num=1000, max_den=10):
    return st.builds(
        Fraction, st.integers(min_num, max_num), st.integers(1, max_den)
    )


positive_entries = rationals(min_num=1)


@st.composite
def matrices(draw, positive=False):
    entry = positive_entries if positive else st.one_of(st.just(Fraction(0)), positive_entries)
    entries = draw(st.tuples(entry, entry, entry, entry).filter(any))
    return MatchingMatrix(*entries)


# Oracles written from the textbook formulas, independent of the package.


def oracle_rate(a, b, c, d):
    """Expected like-type mass: sum over types of (men share)(women share)|M|."""
    n = a + b + c + d
    return (a + b) / n * (a + c) / n * n + (d + b) / n * (d + c) / n * n


def oracle_alr_shares(a, b, c, d):
    n = a + b + c + d
    return ((a + d) / n) / ((a + b) / n * (a + c) / n + (d + b) / n * (d + c) / n)


def oracle_alr_counts(a, b, c, d):
    n = a + b + c + d
    return (a + d) / ((a + b) * (a + c) / n + (d + b) * (d + c) / n)


_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
