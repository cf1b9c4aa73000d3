import pytest
from hypothesis import strategies as st

from bpdrsk.biword import PlacticBiword

EXAMPLE = "1,3,1,2,1/3,3,2,2,1"

# rows i = 0..3 of the worked growth diagram
EXAMPLE_CELLS = [
    ["12345", "12435", "12534", "13524", "15324", "25314"],
    ["12345", "12345", "12435", "12435", "13425", "13425"],
    ["12345", "12345", "12435", "12435", "12435", "12435"],
    ["12345", "12345", "12345", "12345", "12345", "12345"],
]


@st.composite
def plactic_biwords(draw, max_k=4, max_len=6, min_len=0):
    ks = draw(st.lists(st.integers(1, max_k), min_size=min_len, max_size=max_len))
    ks.sort(reverse=True)
    letters = tuple((draw(st.integers(1, k)), k) for k in ks)
    return PlacticBiword(letters)


@pytest.fixture
def example():
    return PlacticBiword.parse(EXAMPLE)


# acceptance lines are collected here and printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
