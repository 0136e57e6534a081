from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from braidcheck.braid_core import BraidWord

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def braid_words(draw, n=None, min_n=2, max_n=6, max_len=14):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    idx = st.integers(1, n - 1)
    letters = draw(st.lists(st.tuples(idx, st.booleans()), max_size=max_len))
    return BraidWord(n, tuple(i if pos else -i for i, pos in letters))


@st.composite
def braid_pairs(draw, min_n=2, max_n=6, max_len=12):
    n = draw(st.integers(min_n, max_n))
    return draw(braid_words(n=n, max_len=max_len)), draw(braid_words(n=n, max_len=max_len))


@st.composite
def zero_exponent_words(draw, min_n=5, max_n=7, max_len=12):
    n = draw(st.integers(min_n, max_n))
    pos = draw(st.lists(st.integers(1, n - 1), max_size=max_len // 2))
    neg = draw(st.lists(st.integers(1, n - 1), min_size=len(pos), max_size=len(pos)))
    letters = draw(st.permutations(pos + [-x for x in neg]))
    return BraidWord(n, tuple(letters))
