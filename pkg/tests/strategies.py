"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from semitrio.semilinear import LinearSet, SemilinearSet


def vectors(k, top=4):
    return st.tuples(*[st.integers(0, top)] * k)


@st.composite
def linear_sets(draw, k, top=4, max_periods=2):
    return LinearSet(draw(vectors(k, top)), tuple(draw(st.lists(vectors(k, top), max_size=max_periods))))


@st.composite
def semilinear_sets(draw, k, top=4, max_parts=2):
    return SemilinearSet(k, tuple(draw(st.lists(linear_sets(k, top), max_size=max_parts))))


words = st.text(alphabet="ab", max_size=8)
