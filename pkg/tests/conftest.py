from fractions import Fraction

import pytest

from altbases.precision import PrecisionContext

GRID = (Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3))


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(60)


@pytest.fixture(scope="session")
def ctx80():
    return PrecisionContext(80)


def close(x, y, tol, relative=True):
    diff = abs(x - y)
    if isinstance(tol, Fraction):
        tol = diff.context.mpf(tol.numerator) / tol.denominator
    scale = max(abs(y), 1) if relative else 1
    return diff <= tol * scale


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
