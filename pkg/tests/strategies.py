"""Hypothesis strategies for braid words."""

from __future__ import annotations

from hypothesis import strategies as st

from uvbraid.braidword import BraidWord, rho, sigma


@st.composite
def words(draw, min_n: int = 2, max_n: int = 5, max_len: int = 16, n: int | None = None):
    strands = n if n is not None else draw(st.integers(min_n, max_n))
    letter = st.tuples(st.integers(1, strands - 1), st.sampled_from(("s", "s-", "r"))).map(
        lambda t: sigma(t[0]) if t[1] == "s" else sigma(t[0], -1) if t[1] == "s-" else rho(t[0])
    )
    return BraidWord(strands, tuple(draw(st.lists(letter, max_size=max_len))))


@st.composite
def word_pairs(draw, max_n: int = 5, max_len: int = 12):
    strands = draw(st.integers(2, max_n))
    return draw(words(n=strands, max_len=max_len)), draw(words(n=strands, max_len=max_len))
