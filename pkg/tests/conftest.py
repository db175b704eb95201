import random

import pytest
from hypothesis import strategies as st

from treegf.oracle import prufer_decode
from treegf.tree import build_tree

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def double_star():
    # A = 1 and C = 2 are the centres, B = 3 hangs on A
    return build_tree(6, [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6)])


def random_tree(rng: random.Random, n: int):
    if n == 1:
        return build_tree(1, [])
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    return build_tree(n, prufer_decode(seq, n))


@st.composite
def trees(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return build_tree(1, [])
    seq = draw(st.lists(st.integers(1, n), min_size=n - 2, max_size=n - 2))
    return build_tree(n, prufer_decode(seq, n))
