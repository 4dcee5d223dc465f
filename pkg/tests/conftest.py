import pytest
from hypothesis import strategies as st

from weakcode.permcore import Permutation, parse_permutation


def perm(text: str) -> Permutation:
    return parse_permutation(text)


@st.composite
def permutations_of(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    word = draw(st.permutations(range(1, n + 1)))
    return Permutation(tuple(word))


@pytest.fixture
def w32514():
    return perm("32514")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, note in RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  [{note}]")
