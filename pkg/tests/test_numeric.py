import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from h3dunkl import dunkl as dk
from h3dunkl.numeric import FloatPoly, WeightSampler, float_eval, mc_pairing
from h3dunkl.polyalg import MultiPoly
from h3dunkl.verify import random_poly
from h3dunkl.scalars import DenominatorVanishes, KAPPA, TAU_FLOAT, param_eval

from conftest import polys

coords = st.tuples(*[st.integers(-3, 3)] * 3)


def golden_float(g) -> float:
    return float(g.a) + float(g.b) * TAU_FLOAT


@given(polys(max_degree=4), coords, st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(2)]))
def test_float_eval_matches_exact(p, x, k0):
    p = p * (KAPPA + 1)
    exact = golden_float(param_eval(p.evaluate(list(x)), k0, 1))
    assert float_eval(p, x, k0) == pytest.approx(exact, rel=1e-12, abs=1e-12)


def test_float_poly_vectorised():
    p = MultiPoly.parse("x1^2*x2 - 3*x3 + 1")
    fp = FloatPoly.from_multipoly(p, 0, 1)
    pts = np.array([[1.0, 2.0, 3.0], [0.0, 0.0, 0.0]])
    assert fp(pts) == pytest.approx([1 * 2 - 9 + 1, 1])
    with pytest.raises(ValueError):
        fp(np.zeros((1, 2)))


def test_undefined_parameter_value():
    p = MultiPoly.const(1) * (1 / (KAPPA - 1))
    with pytest.raises(DenominatorVanishes):
        float_eval(p, (0, 0, 0), 1)


def test_sampler_validation_and_determinism():
    with pytest.raises(ValueError):
        WeightSampler(omega=0)
    with pytest.raises(ValueError):
        WeightSampler(proposal="uniform")
    a, wa = WeightSampler(seed=3).sample(10)
    b, wb = WeightSampler(seed=3).sample(10)
    assert np.array_equal(a, b) and np.array_equal(wa, wb)


def test_weights_vanish_on_mirrors():
    s = WeightSampler(kappa=1)
    root = s._roots[0]
    mirror_point = np.cross(root, [0.3, 0.1, 0.7])[None, :]
    assert s.weights(mirror_point)[0] == pytest.approx(0, abs=1e-20)


@pytest.mark.parametrize(
    "proposal, kappa",
    [("gaussian", Fraction(1, 4)), ("radial", Fraction(1, 4)), ("radial", Fraction(1))],
)
def test_mc_matches_exact_pairing(proposal, kappa):
    p = MultiPoly.parse("x1^2 + tau*x2*x3")
    exact = golden_float(param_eval(dk.pairing_L2(dk.default_context(), p, p), kappa, 1))
    est, se = mc_pairing(p, p, float(kappa), 1.0, samples=200_000, seed=7, proposal=proposal)
    assert abs(est - exact) <= 4 * se


@pytest.mark.parametrize("seed", range(4))
@pytest.mark.parametrize("kappa", [1, 2])
def test_radial_mc_converges_at_integer_kappa(kappa, seed):
    rng = random.Random(100 * kappa + seed)
    p = random_poly(rng, rng.randint(1, 4))
    q = random_poly(rng, rng.randint(1, 4))
    ctx = dk.default_context().with_kappa(kappa)
    exact = golden_float(param_eval(dk.pairing_L2_moments(ctx, p, q, kappa), kappa, 1))
    est, se = mc_pairing(p, q, kappa, 1.0, samples=1_000_000, seed=seed)
    assert abs(est - exact) <= 3 * se


def test_mc_linear_moment_at_kappa_zero():
    x1 = MultiPoly.var(0)
    est, se = mc_pairing(x1, x1, 0.0, 1.0, samples=100_000, seed=2)
    assert abs(est - 0.5) <= 3 * se


def test_mc_constant_is_one():
    est, se = mc_pairing(MultiPoly.const(1), MultiPoly.const(1), 0.5, 2.0, samples=1000, seed=1)
    assert est == pytest.approx(1.0)
    assert se == pytest.approx(0.0, abs=1e-12)
