from fractions import Fraction

from hypothesis import strategies as st

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=100)


def rational_vectors(min_size=1, max_size=30):
    return st.lists(rationals, min_size=min_size, max_size=max_size)


def F(*args):
    return Fraction(*args)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
