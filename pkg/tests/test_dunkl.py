from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from h3dunkl import dunkl as dk
from h3dunkl.group import Y0, h3_group, row_times
from h3dunkl.polyalg import MultiPoly, X
from h3dunkl.scalars import KAPPA, OMEGA, TAU

from conftest import golden, polys

CTX = dk.default_context()
G = h3_group()
x1, x2, x3 = X(0), X(1), X(2)
E = dk.E_BASIS
directions = st.tuples(golden, golden, golden)


def test_D1_x1_cubed():
    expected = (
        x1**2 * (3 + Fraction(23, 2) * KAPPA)
        - x2**2 * (KAPPA / 2 * (TAU - 7))
        + x3**2 * (KAPPA / 2 * (TAU + 6))
    )
    assert dk.dunkl_i(CTX, x1**3, 0) == expected


@given(polys(max_degree=4), st.integers(0, 2), st.integers(0, 2))
def test_dunkl_operators_commute(p, i, j):
    assert dk.dunkl_i(CTX, dk.dunkl_i(CTX, p, j), i) == dk.dunkl_i(CTX, dk.dunkl_i(CTX, p, i), j)


@given(polys(homogeneous_degree=3), directions)
def test_dunkl_lowers_degree(p, u):
    out = dk.dunkl(CTX, p, u)
    assert out.is_zero() or out.homogeneous_component(2, x_only=True) == out


@given(polys(max_degree=3), st.integers(0, 119), directions)
def test_equivariance(p, g, u):
    # u D_a u^{-1} = D_{a u^{-1}}, with (u f)(x) = f(x u)
    m = G.elements[g].matrix
    a_new = row_times(u, G.elements[G.inverse[g]].matrix)
    assert dk.dunkl(CTX, p, u).substitute(m) == dk.dunkl(CTX, p.substitute(m), a_new)


@given(polys(max_degree=4))
def test_laplacian_closed_form_matches_squares(p):
    assert dk.dunkl_laplacian(CTX, p) == dk.dunkl_laplacian_by_squares(CTX, p)


def test_laplacian_of_r2_phi():
    phi = dk.harmonic_project(CTX, x1 * x2)
    r2 = MultiPoly.norm_sq()
    assert dk.dunkl_laplacian(CTX, r2 * phi) == phi * (2 * (3 + 30 * KAPPA + 4))


@given(polys(homogeneous_degree=4))
def test_harmonic_projection(p):
    h = dk.harmonic_project(CTX, p)
    assert dk.dunkl_laplacian(CTX, h).is_zero()
    assert dk.harmonic_project(CTX, h) == h


@given(polys(max_degree=5))
def test_harmonic_decomposition_reconstructs(p):
    top = p.homogeneous_component(5)
    parts = dk.harmonic_decompose(CTX, top)
    r2 = MultiPoly.norm_sq()
    for _, h in parts:
        assert dk.dunkl_laplacian(CTX, h).is_zero()
    assert sum((r2**j * h for j, h in parts), MultiPoly.const(0)) == top


@given(polys(max_degree=4))
def test_heat_exp_inverse(p):
    assert dk.heat_exp(CTX, dk.heat_exp(CTX, p, 1), -1) == p


@given(polys(max_degree=3), polys(max_degree=3))
def test_pairings_symmetric(p, q):
    assert dk.pairing_kw(CTX, p, q) == dk.pairing_kw(CTX, q, p)
    assert dk.pairing_L2(CTX, p, q) == dk.pairing_L2(CTX, q, p)


def test_pairing_L2_normalised():
    assert dk.pairing_L2(CTX, MultiPoly.const(1), MultiPoly.const(1)) == 1


@given(polys(max_degree=2), polys(max_degree=2), st.sampled_from([0, 1]))
def test_E_operator_pairing_matches_moments(p, q, k0):
    ctx = CTX.with_kappa(k0)
    assert dk.pairing_L2(ctx, p, q) == dk.pairing_L2_moments(ctx, p, q, k0)


@given(polys(max_degree=3), polys(max_degree=3))
def test_ladder_operators_adjoint(p, q):
    a = Y0
    lhs = dk.pairing_L2(CTX, dk.raise_lower(CTX, a, 1, p), q)
    rhs = dk.pairing_L2(CTX, p, dk.raise_lower(CTX, a, -1, q))
    assert lhs == rhs


@given(polys(max_degree=4))
def test_angular_square_two_forms(p):
    assert dk.angular_J_square(CTX, p, "closed") == dk.angular_J_square(CTX, p, "definition")


@given(polys(max_degree=3))
def test_H1_is_multiple_of_hamiltonian(p):
    assert dk.H_k_tilde(CTX, 1, p) == dk.hamiltonian_tilde(CTX, p) * (2 * (TAU + 2))


@given(polys(max_degree=3))
def test_hamiltonian_commutes_with_H_a(p):
    h = lambda f: dk.hamiltonian_tilde(CTX, f)
    ha = lambda f: dk.H_a_tilde(CTX, Y0, f)
    assert h(ha(p)) == ha(h(p))


def test_hamiltonian_on_constant():
    assert dk.hamiltonian_tilde(CTX, MultiPoly.const(1)) == MultiPoly.const(OMEGA * (3 + 30 * KAPPA))


def test_laguerre_low_orders():
    s = X(0)
    assert dk.laguerre(0, KAPPA, s) == MultiPoly.const(1)
    assert dk.laguerre(1, KAPPA, s) == MultiPoly.const(KAPPA + 1) - s
