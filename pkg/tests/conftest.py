import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from grovekit.ring import BetaPolynomial  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@st.composite
def polynomials(draw, nvars=4, max_degree=3, max_terms=5, beta_degree=2, coeff=9):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = tuple(draw(st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars)))
        b = draw(st.integers(0, beta_degree))
        terms[(b, exps)] = terms.get((b, exps), 0) + draw(st.integers(-coeff, coeff))
    return BetaPolynomial(terms)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
