from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from h3dunkl import dunkl as dk
from h3dunkl import waves as wv
from h3dunkl.group import Y0, h3_group
from h3dunkl.polyalg import MultiPoly, X
from h3dunkl.scalars import KAPPA, OMEGA, TAU, pochhammer

from conftest import polys

CTX = dk.default_context()
FAM = wv.family()
x1, x2, x3 = X(0), X(1), X(2)
LIN = x2 * TAU + x3  # <x, y0>
k, w = KAPPA, OMEGA
HALF = Fraction(1, 2)


def test_q2_q3():
    # the radial term carries a factor kappa; without it the polynomial is not q_2
    assert FAM.q(2) == LIN**2 + MultiPoly.norm_sq() * (2 * KAPPA * (TAU + 2))
    assert FAM.q(2) != LIN**2 + MultiPoly.norm_sq() * (2 * (TAU + 2))


def test_q3_directional_derivative():
    for u in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        u_dot_y0 = u[1] * TAU + u[2]
        assert dk.dunkl(CTX, FAM.q(3), u) == FAM.q(2) * ((10 * KAPPA + 3) * u_dot_y0)


def test_low_degree_q():
    assert FAM.q(0) == MultiPoly.const(1)
    assert FAM.q(1) == LIN


def test_nu_values():
    assert wv.nu(0) == 1
    assert wv.nu(1) == 10 * k + 1
    assert wv.nu(2) == (10 * k + 1) * (12 * k + 2)
    for n in range(1, 10):
        for m in range(n // 2 + 1):
            assert wv.nu_ratio(n, m) == wv.nu_ratio_closed(n, m)


@pytest.mark.parametrize("half", range(1, 6))
def test_derivative_rule_both_parities(half):
    assert wv.verify_q_derivative(FAM, half, (1, 0, 0)) == {"even": True, "odd": True}


@pytest.mark.parametrize("n", range(2, 9))
def test_laplacian_lowers_q(n):
    expected = FAM.q(n - 2) * (wv.nu(n) / wv.nu(n - 2) * (TAU + 2))
    assert dk.dunkl_laplacian(CTX, FAM.q(n)) == expected


@pytest.mark.parametrize("n", range(0, 9))
def test_phi_is_harmonic_with_top_term_q(n):
    phi = FAM.phi(n)
    assert dk.dunkl_laplacian(CTX, phi).is_zero()
    assert phi.homogeneous_component(n, x_only=True) == phi
    assert wv.verify_laplacian_q(FAM, n) or n < 2


@pytest.mark.parametrize("n", range(0, 7))
def test_parity_in_base_vertex(n):
    neg = wv.QFamily(tuple(-c for c in Y0), 8)
    assert neg.q(n) == FAM.q(n) * (-1) ** n


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(st.just(n), polys(homogeneous_degree=n))))
def test_reproducing_property(case):
    n, p = case
    lhs = dk.pairing_kw(CTX, p, FAM.q(n))
    assert lhs == wv.nu(n) / (2 * w) ** n * p.evaluate(list(Y0))


@pytest.mark.parametrize("n", range(0, 7))
def test_vertex_values(n):
    assert wv.q_at_vertex(n, "same") == wv.q_at_vertex_direct(n, "same")
    assert wv.q_at_vertex(n, "tau") == wv.q_at_vertex_direct(n, "tau")


@pytest.mark.parametrize("n", range(1, 6))
def test_w_is_an_energy_eigenfunction(n):
    assert wv.hamiltonian_eigen(CTX, FAM.w(n)) == w * (3 + 30 * k + 2 * n)


def test_eigenvalue_adjudication_flags_alternative():
    rows = wv.eigenvalue_adjudication(3, FAM)
    assert all(r["matches_E_n"] and not r["matches_alternative"] for r in rows)


def test_w_heat_relation():
    for n in range(5):
        assert dk.heat_exp(CTX, FAM.w(n), 1) == FAM.q(n)


def test_w3_needs_laguerre_factor():
    forms = wv.w3_two_term_forms(FAM)
    assert forms == {"two_term": False, "with_laguerre_factor": True}


def test_J_on_phi3():
    assert dk.angular_J_square(CTX, FAM.phi(3)) == FAM.phi(3) * (-2 * (10 * k + 3) * (10 * k + 2))


def test_J_on_w2():
    assert dk.angular_J_square(CTX, FAM.w(2)) == FAM.phi(2) * (-6 * (6 * k + 1) ** 2)


@pytest.mark.parametrize("target", ["phi_odd", "phi_G", "phi_even", "combination", "w"])
def test_jsquare_targets(target):
    n = 3 if target == "phi_G" else 2
    assert wv.jsquare_eigencheck(target, n, FAM)["holds"]


def test_power_sums():
    r2 = MultiPoly.norm_sq()
    assert wv.power_sum(1) == r2 * (2 * (TAU + 2))
    # the coefficient is 6(tau + 1), not 6(tau + 2)
    assert wv.power_sum(2) == r2**2 * (6 * (TAU + 1))
    assert wv.power_sum(3) == r2**3 * (4 * (4 * TAU + 3)) + wv.icosa_product() * (6 * (2 * TAU - 1))



def test_s10_dodeca_sign():
    r2 = MultiPoly.norm_sq()
    rest = r2**2 * wv.icosa_product() * (75 * (3 * TAU + 1)) + r2**5 * (10 * (11 * TAU + 7))
    k_part = wv.dodeca_product() * (5 * (5 * TAU + 3))
    assert wv.power_sum(5) == rest - k_part
    assert wv.power_sum(5) != rest + k_part

def test_invariant_phi_low_degrees():
    for n2 in (2, 4):
        assert wv.invariant_phi(n2).is_zero()
    phi6 = wv.invariant_phi(6)
    assert not phi6.is_zero()
    g = h3_group().elements[7].matrix
    assert phi6.substitute(g) == phi6
    assert dk.dunkl_laplacian(CTX, phi6).is_zero()


def test_norm_phiG6_closed_form():
    closed = (
        (2**6 * 15)
        * (TAU / w) ** 6
        * pochhammer(6 * k + 1, 3)
        * pochhammer(5 * k + HALF, 3)
        * (5 * k + 1)
        * (2 * k + 1)
        / (30 * k + 7)
    )
    assert wv.norm_invariant_phi(3) == closed
    assert wv.closed_form_invariant_norms()[6] == closed


def test_invariant_dimensions():
    for n2 in wv.VANISHING_INVARIANT_DEGREES:
        assert wv.harmonic_invariant_dimension(n2) == 0
    assert wv.harmonic_invariant_dimension(6) == 1
    assert wv.harmonic_invariant_dimension(10) == 1


def test_laguerre_wave_energy_and_norm():
    f, norm = wv.laguerre_wave(2, 1, source="vertex", fam=FAM)
    assert wv.hamiltonian_eigen(CTX, f) == w * (3 + 30 * k + 2 * 4)
    assert dk.pairing_L2(CTX, f, f) == norm


def test_invariant_laguerre_wave_norm():
    f, norm = wv.laguerre_wave(6, 2, source="invariant")
    assert wv.hamiltonian_eigen(CTX, f) == w * (3 + 30 * k + 2 * 10)
    assert norm == pochhammer(15 * k + 6 + 3 * HALF, 2) / 2 * wv.norm_invariant_phi(3)


def test_degree_cap():
    small = wv.QFamily(Y0, 4)
    with pytest.raises(wv.DegreeCapExceeded):
        small.q(5)
    with pytest.raises(ValueError):
        small.q(-1)
