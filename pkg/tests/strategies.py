from hypothesis import strategies as st

from immaculate.compositions import Composition


@st.composite
def compositions(draw, max_size=6, min_size=0):
    n = draw(st.integers(min_size, max_size))
    parts, left = [], n
    while left:
        p = draw(st.integers(1, left))
        parts.append(p)
        left -= p
    return Composition(parts)


@st.composite
def nonempty_compositions(draw, max_size=6):
    return draw(compositions(max_size=max_size, min_size=1))

