from fractions import Fraction

from hypothesis import HealthCheck, settings, strategies as st

from g2so4.ratfunc import as_ratfunc, sym

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small = st.fractions(min_value=-6, max_value=6, max_denominator=5)
nonzero = small.filter(lambda q: q != 0)


@st.composite
def polys(draw, names=("s", "t")):
    out = as_ratfunc(0)
    for _ in range(draw(st.integers(1, 3))):
        term = as_ratfunc(draw(small))
        for n in names:
            term = term * sym(n) ** draw(st.integers(0, 2))
        out = out + term
    return out


@st.composite
def ratfuncs(draw):
    den = draw(polys().filter(lambda p: not p.is_zero()))
    return draw(polys()) / den


def frac(a, b=1):
    return Fraction(a, b)
