from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from h3dunkl.group import RootSystemH3, h3_group
from h3dunkl.polyalg import (
    MultiPoly,
    NotDivisible,
    X,
    binomial_series,
    series_product_all,
)
from h3dunkl.scalars import KAPPA, TAU, ParamScalar, pochhammer

from conftest import golden, polys

x1, x2, x3 = X(0), X(1), X(2)


def test_parse_print_round_trip():
    p = MultiPoly.parse("k*x1^2 + tau*x2 - 1/2")
    assert p == x1**2 * KAPPA + x2 * TAU - Fraction(1, 2)
    assert MultiPoly.parse(str(p)) == p


@given(polys(), polys())
def test_json_round_trip(p, q):
    r = p * q + p.scale(KAPPA)
    assert MultiPoly.from_json(r.to_json()) == r


@given(polys(), polys(), st.integers(0, 2))
def test_product_rule(p, q, i):
    assert (p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i)


@given(polys(), golden, golden, golden)
def test_directional_derivative_is_linear_in_direction(p, a, b, c):
    u = (a, b, c)
    expected = p.derivative(0).scale(a) + p.derivative(1).scale(b) + p.derivative(2).scale(c)
    assert p.directional_derivative(u) == expected


@given(polys(max_degree=4))
def test_homogeneous_components_sum_back(p):
    total = MultiPoly.const(0)
    for part in p.homogeneous_components().values():
        assert part.is_zero() or part.is_homogeneous()
        total = total + part
    assert total == p


@given(polys(), polys(), st.integers(0, 119))
def test_substitution_is_a_ring_map(p, q, g):
    m = h3_group().elements[g].matrix
    assert (p * q).substitute(m) == p.substitute(m) * q.substitute(m)


@given(polys(), st.integers(0, 14))
def test_divided_difference_is_exact(p, r):
    v = RootSystemH3().positive_roots[r]
    sigma = h3_group().elements[h3_group().reflection_index[r]].matrix
    diff = p - p.substitute(sigma)
    quotient = diff.exact_divide_linear(v)
    assert quotient * MultiPoly.linear_form(v) == diff


def test_non_divisible_raises():
    with pytest.raises(NotDivisible):
        (x1 + 1).exact_divide_linear((1, 0, 0))


def test_evaluate_and_specialize():
    p = x1 * x2 * KAPPA + x3
    assert p.evaluate([1, 2, 3]) == 2 * KAPPA + 3
    assert p.specialize(kappa=2) == x1 * x2 * 2 + x3


def test_binomial_series_coefficients():
    u = x1
    s = binomial_series(u, KAPPA, 4)
    for m in range(5):
        coeff = pochhammer(KAPPA, m) / ParamScalar.coerce(factorial(m))
        assert s[m] == u**m * coeff


def test_series_product_matches_exponent_addition():
    s = series_product_all([binomial_series(x1, KAPPA, 3), binomial_series(x1, KAPPA, 3)])
    t = binomial_series(x1, 2 * KAPPA, 3)
    assert all(s[m] == t[m] for m in range(4))
