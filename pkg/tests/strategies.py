from fractions import Fraction

from hypothesis import strategies as st

from wrmatrix import BoundaryPair, RecurrenceParams, WrmDescriptor


def rationals(bound=9, den=5, nonzero=False):
    nums = st.integers(-bound, bound)
    if nonzero:
        nums = nums.filter(bool)
    return st.builds(Fraction, nums, st.integers(1, den))


def sequences(min_size=1, max_size=8, **kw):
    return st.lists(rationals(**kw), min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def descriptors(draw, max_n=7, params=None):
    n = draw(st.integers(1, max_n))
    alpha = draw(sequences(n, n))
    beta = draw(sequences(n, n))
    beta = (alpha[0],) + beta[1:]
    if params is None:
        params = RecurrenceParams(draw(rationals()), draw(rationals()), draw(rationals()))
    return WrmDescriptor(RecurrenceParams.of(*params), BoundaryPair(alpha, beta))
