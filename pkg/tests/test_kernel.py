import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from h3dunkl import dunkl as dk
from h3dunkl import kernel as kn
from h3dunkl.group import Y0
from h3dunkl.polyalg import MultiPoly
from h3dunkl.scalars import TAU

from conftest import golden, polys

CTX = dk.default_context()
E = dk.E_BASIS
GOLDEN = Path(__file__).parent / "golden" / "h3_J_commutator_kappa0.json"

WORDS = {
    "D1": ([("D", E[0])], lambda p: dk.dunkl(CTX, p, E[0])),
    "x3 D2": ([("D", E[1]), ("x", E[2])], lambda p: MultiPoly.var(2) * dk.dunkl(CTX, p, E[1])),
    "lap": ([("lap",)], lambda p: dk.dunkl_laplacian(CTX, p)),
    "r2 lap": ([("lap",), ("r2",)], lambda p: MultiPoly.norm_sq() * dk.dunkl_laplacian(CTX, p)),
    "H": ([("H",)], lambda p: dk.hamiltonian_tilde(CTX, p)),
    "Ha": ([("Ha", Y0)], lambda p: dk.H_a_tilde(CTX, Y0, p)),
}


@given(polys(max_degree=3, max_terms=3), st.sampled_from(sorted(WORDS)))
def test_soundness_at_y_zero(f, name):
    word, apply_poly = WORDS[name]
    assert kn.soundness_check(word, f, apply_poly)


@given(polys(max_degree=2, max_terms=2), st.integers(0, 119), st.tuples(golden, golden, golden))
def test_group_coherence(f, g, u):
    s = kn.KernelSum.kernel(f, CTX)
    assert kn.group_coherence(s, g, u)


def test_kernel_sum_arithmetic():
    s = kn.KernelSum.kernel(MultiPoly.var(0), CTX)
    t = s.dunkl(E[1])
    assert (s + t) - t == s
    assert (s - s).is_zero()
    assert s.scale(2) == s + s
    assert len(kn.KernelSum.kernel(ctx=CTX)) == 1
    assert json.dumps(t.to_json_obj())


def test_bare_kernel_is_a_dunkl_eigenfunction():
    # D_u K(x, y) = <u, y> K(x, y)
    s = kn.KernelSum.kernel(ctx=CTX)
    u = (1, 2, TAU)
    expected = s.mul(MultiPoly.var(3, 6) + MultiPoly.var(4, 6) * 2 + MultiPoly.var(5, 6) * TAU)
    assert s.dunkl(u) == expected


def test_H1_relation_on_kernel():
    s = kn.KernelSum.kernel(ctx=CTX)
    assert kn.op_H_k(s, 1) == kn.op_hamiltonian(s).scale(2 * (TAU + 2))


def test_H2_operator_form_on_small_polys():
    for p in (MultiPoly.const(1), MultiPoly.var(0), MultiPoly.var(0) * MultiPoly.var(1)):
        assert dk.H_k_tilde(CTX, 2, p) == kn.h2_rhs_poly(CTX, p)


def test_invariant_group_constant():
    assert kn.invariant_group_constant(MultiPoly.const(1))
    assert kn.invariant_group_constant(MultiPoly.norm_sq())


def test_unknown_word_token():
    with pytest.raises(ValueError):
        kn.ks_apply_operator([("nope",)], kn.KernelSum.kernel(ctx=CTX))


def test_kappa0_J_of_one():
    assert kn.kappa0_J_of_one()["holds"]


def test_kappa0_hamiltonian_commutes_with_J():
    assert kn.kappa0_H_J_commutator().is_zero()


def test_kappa0_H3_J_witness_matches_archive():
    witness = kn.kappa0_commutator(3, "J")
    assert not witness.is_zero()
    assert witness == MultiPoly.from_json(GOLDEN.read_text(), arity=6)


def test_kappa0_has_no_group_action():
    with pytest.raises(NotImplementedError):
        kn.Kappa0Exp.kernel().act(0)
