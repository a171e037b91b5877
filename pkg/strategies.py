from fractions import Fraction

from hypothesis import strategies as st

from src.geometry.gltype import GLType, validate_type
from src.grading.lgroup import normal_form


def moment_rows(d, n):
    """Rows (1, k, k^2, ..., k^d) for k = 1..n; any d+1 of them are independent."""
    return [[k ** j for j in range(d + 1)] for k in range(1, n + 1)]


@st.composite
def random_rows(draw, d, n, bound=5):
    """n nonzero rows of d+1 integer or rational coefficients."""
    entry = st.builds(Fraction, st.integers(-bound, bound), st.sampled_from([1, 1, 1, 2, 3]))
    row = st.lists(entry, min_size=d + 1, max_size=d + 1).filter(any)
    return draw(st.lists(row, min_size=n, max_size=n))


@st.composite
def gl_types(draw, max_d=2, max_n=3, max_weight=3, min_n=0, attempts=10):
    """Types with random hyperplanes in general position.

    Rows are redrawn up to `attempts` times; the moment curve is the fallback.
    """
    d = draw(st.integers(1, max_d))
    n = draw(st.integers(min_n, max_n))
    weights = draw(st.lists(st.integers(1, max_weight), min_size=n, max_size=n))
    for _ in range(attempts):
        t = GLType.create(d, weights, draw(random_rows(d, n)))
        if validate_type(t).ok:
            return t
    return GLType.create(d, weights, moment_rows(d, n))


@st.composite
def elements(draw, t, bound=6):
    raw = draw(st.lists(st.integers(-bound, bound), min_size=t.n + 1, max_size=t.n + 1))
    return normal_form(raw, t)


@st.composite
def types_with_elements(draw, count=2, **kwargs):
    t = draw(gl_types(**kwargs))
    return (t,) + tuple(draw(elements(t)) for _ in range(count))
