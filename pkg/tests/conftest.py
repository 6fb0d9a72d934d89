import pytest
from hypothesis import strategies as st

from blocksort.perm import Permutation


@st.composite
def permutations(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@pytest.fixture
def running_example():
    return Permutation.parse("3417562")
