"""Shared hypothesis strategies and settings."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from h3dunkl.polyalg import MultiPoly
from h3dunkl.scalars import KAPPA, OMEGA, GoldenNumber, ParamScalar

settings.register_profile(
    "default",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)

golden = st.builds(GoldenNumber, small_fractions, small_fractions)
nonzero_golden = golden.filter(lambda g: g != GoldenNumber(0, 0))


@st.composite
def param_scalars(draw):
    """Polynomials in tau, kappa, omega of low degree."""
    total = ParamScalar.coerce(draw(golden))
    for _ in range(draw(st.integers(0, 2))):
        c = ParamScalar.coerce(draw(golden))
        total = total + c * KAPPA ** draw(st.integers(0, 2)) * OMEGA ** draw(st.integers(0, 1))
    return total


@st.composite
def polys(draw, max_degree: int = 3, max_terms: int = 4, homogeneous_degree: int | None = None):
    terms = {}
    for _ in range(draw(st.integers(1, max_terms))):
        if homogeneous_degree is None:
            e = tuple(draw(st.integers(0, max_degree)) for _ in range(3))
            if sum(e) > max_degree:
                continue
        else:
            a = draw(st.integers(0, homogeneous_degree))
            b = draw(st.integers(0, homogeneous_degree - a))
            e = (a, b, homogeneous_degree - a - b)
        terms[e] = draw(golden)
    return MultiPoly.from_terms(terms)


kappa_values = st.fractions(min_value=0, max_value=3, max_denominator=4)
omega_values = st.fractions(min_value=Fraction(1, 4), max_value=3, max_denominator=4)
