from hypothesis import given
from hypothesis import strategies as st

from h3dunkl.group import (
    VERTICES,
    Y0,
    RootSystemH3,
    dot,
    h3_group,
    neg,
    row_times,
    stabilizer_census,
)
from h3dunkl.scalars import TAU, GoldenNumber

G = h3_group()
ROOTS = RootSystemH3()
elements = st.integers(0, 119)


def test_census():
    c = G.census()
    assert (c["order"], c["reflections"], c["rotations"], c["improper"]) == (120, 15, 59, 45)
    classes = c["classes"]
    assert (classes["rho2"], classes["rho3"], classes["rho5_1"], classes["rho5_2"]) == (15, 20, 12, 12)


def test_roots():
    assert len(ROOTS.all_roots()) == 30
    assert len(ROOTS.positive_roots) == 15
    for v in ROOTS.positive_roots:
        assert dot(v, v) == GoldenNumber(4)
        assert neg(v) in ROOTS.all_roots()


def test_vertex_sets():
    assert len(VERTICES.I) == 12 and len(VERTICES.I_plus) == 6
    assert len(VERTICES.K) == 20 and len(VERTICES.K_plus) == 10
    assert VERTICES.I[0] == Y0
    for y in VERTICES.I:
        assert dot(y, y) == TAU + 2


def test_vertex_stabilizer():
    fixing, moving, images = stabilizer_census(Y0)
    assert (fixing, moving) == (5, 10)
    others = {y for y in VERTICES.I if y not in (Y0, neg(Y0))}
    assert set(images) == others


@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))


@given(elements)
def test_inverse_and_orthogonality(a):
    e = G.elements[a]
    assert e.is_orthogonal()
    assert G.mul(a, G.inverse[a]) == G.identity


@given(elements, st.integers(0, 29))
def test_roots_are_permuted(a, r):
    v = ROOTS.all_roots()[r]
    assert row_times(v, G.elements[a].matrix) in ROOTS.all_roots()


def test_reflections_square_to_identity():
    for idx in G.reflection_index:
        assert G.mul(idx, idx) == G.identity
        assert G.elements[idx].det == GoldenNumber(-1)
