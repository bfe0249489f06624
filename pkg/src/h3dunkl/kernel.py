"""Operator identities checked on the Dunkl kernel.

An element T of the rational Cherednik algebra is zero exactly when
T K(x, y) = 0, so identities between operators can be tested on formal sums
sum_w p_w(x, y) K(xw, y).  Coefficients are joint polynomials in (x, y) and y
stays generic throughout.

Two backends implement the same three primitives (directional Dunkl
operator, multiplication by a polynomial in x, group element):

* ``KernelSum`` keeps one coefficient per group element.
* ``Kappa0Exp`` is the kappa = 0 shortcut where the kernel is exp<x, y> and
  the Dunkl operator becomes d/dx_i + y_i.

Composite operators (Laplacian, Hamiltonian, angular momentum square, H_a,
H^(k)) are written once against those primitives.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import _ring as R
from .dunkl import E_BASIS, DunklContext, _divided_differences, default_context
from .group import VERTICES, dot, row_times, vec
from .polyalg import MultiPoly
from .scalars import KAPPA, OMEGA, TAU, ParamScalar

ARITY = 6


def _y_form(v) -> MultiPoly:
    """<y, v> as a joint polynomial."""
    out = MultiPoly.const(0, ARITY)
    for j, c in enumerate(vec(*v)):
        if c:
            out = out + MultiPoly.var(3 + j, ARITY) * c
    return out


def _x_form(v) -> MultiPoly:
    return MultiPoly.linear_form(v, ARITY)


def _lift(p: MultiPoly) -> MultiPoly:
    if p.arity == ARITY:
        return p
    return MultiPoly(p.num, p.den, ARITY, _canonical=True)


# ---------------------------------------------------------------------------
# backends


@dataclass
class KernelSum:
    """sum_w terms[w] K(x w, y), keyed by group element index."""

    terms: dict = field(default_factory=dict)
    ctx: DunklContext = field(default_factory=default_context, repr=False, compare=False)

    def __post_init__(self):
        self.terms = {g: _lift(p) for g, p in self.terms.items() if not p.is_zero()}

    @classmethod
    def kernel(cls, coefficient: MultiPoly | None = None, ctx: DunklContext | None = None):
        """coefficient(x, y) K(x, y); defaults to the bare kernel."""
        ctx = ctx or default_context()
        c = MultiPoly.const(1, ARITY) if coefficient is None else _lift(coefficient)
        return cls({ctx.group.identity: c}, ctx)

    def _new(self, terms: dict) -> "KernelSum":
        return KernelSum(terms, self.ctx)

    def __add__(self, other: "KernelSum") -> "KernelSum":
        out = dict(self.terms)
        for g, p in other.terms.items():
            out[g] = out[g] + p if g in out else p
        return self._new(out)

    def __neg__(self) -> "KernelSum":
        return self._new({g: -p for g, p in self.terms.items()})

    def __sub__(self, other: "KernelSum") -> "KernelSum":
        return self + (-other)

    def scale(self, c) -> "KernelSum":
        c = ParamScalar.coerce(c)
        return self._new({g: p * c for g, p in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, KernelSum):
            return NotImplemented
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # primitives

    def mul(self, f: MultiPoly) -> "KernelSum":
        f = _lift(f)
        return self._new({g: p * f for g, p in self.terms.items()})

    def dunkl(self, u) -> "KernelSum":
        """<u, nabla_kappa> applied to the sum."""
        u = vec(*u)
        group = self.ctx.group
        roots = self.ctx.root_data
        out: dict = {}

        def add(g, p):
            if p.is_zero():
                return
            out[g] = out[g] + p if g in out else p

        for g, p in self.terms.items():
            m = group.elements[g].matrix
            # the kernel factor contributes <y w^{-1}, u> = <y, u w>
            add(g, p.directional_derivative(u) + p * _y_form(row_times(u, m)))
            dds = _divided_differences(self.ctx, p.num)
            for rd, ridx, d in zip(roots, group.reflection_index, dds):
                if d.is_zero():
                    continue
                c = dot(u, rd.v)
                if not c:
                    continue
                term = MultiPoly(R.reduce_tau(self.ctx._k * c.to_poly() * d), p.den, ARITY)
                add(group.mul(ridx, g), term)
        return self._new(out)

    def act(self, index: int) -> "KernelSum":
        """(u F)(x) = F(x u) for the group element u = elements[index]."""
        group = self.ctx.group
        m = group.elements[index].matrix
        return self._new(
            {group.mul(index, g): p.substitute(m, "x") for g, p in self.terms.items()}
        )

    # read-outs

    def at_y_zero(self) -> MultiPoly:
        """Collapse to a polynomial in x using K(xw, 0) = 1."""
        out = MultiPoly.const(0, ARITY)
        for p in self.terms.values():
            out = out + p.substitute_vars({3 + j: MultiPoly.const(0) for j in range(3)})
        return MultiPoly(out.num, out.den, 3, _canonical=True)

    def to_json_obj(self) -> dict:
        return {str(g): p.to_json_obj() for g, p in sorted(self.terms.items())}


@dataclass
class Kappa0Exp:
    """p(x, y) exp<x, y>, with the exponential left implicit."""

    poly: MultiPoly

    def __post_init__(self):
        self.poly = _lift(self.poly)

    @classmethod
    def kernel(cls, coefficient: MultiPoly | None = None):
        return cls(MultiPoly.const(1, ARITY) if coefficient is None else coefficient)

    def __add__(self, other):
        return Kappa0Exp(self.poly + other.poly)

    def __neg__(self):
        return Kappa0Exp(-self.poly)

    def __sub__(self, other):
        return Kappa0Exp(self.poly - other.poly)

    def scale(self, c):
        return Kappa0Exp(self.poly * ParamScalar.coerce(c))

    def __eq__(self, other):
        if not isinstance(other, Kappa0Exp):
            return NotImplemented
        return self.poly == other.poly

    def is_zero(self):
        return self.poly.is_zero()

    def mul(self, f: MultiPoly):
        return Kappa0Exp(self.poly * _lift(f))

    def dunkl(self, u):
        u = vec(*u)
        return Kappa0Exp(self.poly.directional_derivative(u) + self.poly * _y_form(u))

    def act(self, index: int):
        raise NotImplementedError("group elements are not represented at kappa = 0")


# ---------------------------------------------------------------------------
# composite operators, written against the backend primitives


def op_laplacian(s):
    out = None
    for e in E_BASIS:
        t = s.dunkl(e).dunkl(e)
        out = t if out is None else out + t
    return out


def op_x_dot_dunkl(s):
    out = None
    for i, e in enumerate(E_BASIS):
        t = s.dunkl(e).mul(MultiPoly.var(i, ARITY))
        out = t if out is None else out + t
    return out


def op_reflection_sum(s):
    ctx = s.ctx
    out = None
    for ridx in ctx.group.reflection_index:
        t = s.act(ridx)
        out = t if out is None else out + t
    return out


def op_class_sum(s, tag: str):
    out = None
    for idx in s.ctx.group.class_members(tag):
        t = s.act(idx)
        out = t if out is None else out + t
    return out


def op_hamiltonian(s, kappa=KAPPA):
    """-Delta_kappa + omega (3 + 2 sum_i x_i D_i + 2 kappa sum_v sigma_v)."""
    out = -op_laplacian(s) + (s.scale(3) + op_x_dot_dunkl(s).scale(2)).scale(OMEGA)
    if isinstance(s, KernelSum):
        out = out + op_reflection_sum(s).scale(2 * OMEGA * kappa)
    return out


def op_J(s, a, b):
    """J_{a,b} = <a,x> D_b - <b,x> D_a."""
    return s.dunkl(b).mul(_x_form(a)) - s.dunkl(a).mul(_x_form(b))


def op_J_square(s):
    out = None
    for i in range(3):
        for j in range(i + 1, 3):
            a, b = E_BASIS[i], E_BASIS[j]
            t = op_J(op_J(s, a, b), a, b)
            out = t if out is None else out + t
    return out


def op_H_a(s, a):
    """omega (<a,x> D_a + D_a <a,x>) - D_a^2."""
    la = _x_form(a)
    d = s.dunkl(a)
    return (d.mul(la) + s.mul(la).dunkl(a)).scale(OMEGA) - d.dunkl(a)


def op_H_k(s, k: int, points=None):
    pts = VERTICES.I_plus if points is None else points
    out = None
    for y in pts:
        r = s
        for _ in range(k):
            r = op_H_a(r, y)
        out = r if out is None else out + r
    return out


def h2_group_terms(s):
    """The group-algebra part of the H^(2) relation."""
    c = OMEGA**2 * (TAU + 1)
    out = op_reflection_sum(s).scale(-32 * c * KAPPA)
    for tag, coeff in h2_class_coefficients():
        out = out + op_class_sum(s, tag).scale(-coeff * KAPPA**2)
    return out


def h2_rhs(s):
    """Right side of the H^(2) relation, with the constant read as a multiple of 1."""
    c = OMEGA**2 * (TAU + 1)
    return (
        op_hamiltonian(op_hamiltonian(s)).scale(6 * (TAU + 1))
        + op_J_square(s).scale(8 * c)
        - s.scale(24 * c)
        + h2_group_terms(s)
    )


def h2_rhs_poly(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """Right side of the H^(2) relation acting directly on a polynomial."""
    from .dunkl import angular_J_square, class_sum_op, hamiltonian_tilde, reflection_sum

    c = OMEGA**2 * (TAU + 1)
    out = (
        hamiltonian_tilde(ctx, hamiltonian_tilde(ctx, p)) * (6 * (TAU + 1))
        + angular_J_square(ctx, p) * (8 * c)
        - p * (24 * c)
        - reflection_sum(ctx, p) * (32 * c * ctx.kappa)
    )
    for tag, coeff in h2_class_coefficients():
        out = out - class_sum_op(ctx, tag)(p) * (coeff * ctx.kappa**2)
    return out


def h2_class_coefficients():
    c = OMEGA**2 * (TAU + 1)
    return (
        ("rho2", 32 * c),
        ("rho3", 36 * c),
        ("rho5_1", 20 * OMEGA**2 * (TAU + 2)),
        ("rho5_2", 20 * OMEGA**2 * (4 * TAU + 3)),
    )


# ---------------------------------------------------------------------------
# operator words

_WORD_OPS: dict = {
    "D": lambda s, u: s.dunkl(u),
    "x": lambda s, a: s.mul(_x_form(a)),
    "g": lambda s, idx: s.act(idx),
    "lap": lambda s: op_laplacian(s),
    "r2": lambda s: s.mul(MultiPoly.norm_sq(ARITY)),
    "H": lambda s: op_hamiltonian(s),
    "J": lambda s: op_J_square(s),
    "Ha": lambda s, a: op_H_a(s, a),
    "Hk": lambda s, k: op_H_k(s, k),
}


def ks_apply_operator(word: Sequence, s):
    """Apply an operator word to a kernel sum.

    ``word`` is a list of tokens such as ``("D", u)``, ``("x", a)``,
    ``("g", index)``, ``("lap",)``, ``("r2",)``, ``("H",)``, ``("J",)``,
    ``("Ha", a)`` or ``("Hk", k)``.  Tokens are applied in list order, so
    the first token acts first.
    """
    for tok in word:
        name, *args = tok if isinstance(tok, (tuple, list)) else (tok,)
        try:
            fn = _WORD_OPS[name]
        except KeyError:
            raise ValueError(f"unknown operator token {name!r}") from None
        s = fn(s, *args)
    return s


def ks_dunkl(s: KernelSum, i: int) -> KernelSum:
    return s.dunkl(E_BASIS[i])


def commutator_on(A: Callable, B: Callable, s):
    return A(B(s)) - B(A(s))


# ---------------------------------------------------------------------------
# checks


def h2action_kernel_check(ctx: DunklContext | None = None) -> dict:
    """Both sides of the H^(2) relation applied to 1 K(x, y)."""
    s = KernelSum.kernel(ctx=ctx)
    lhs = op_H_k(s, 2)
    rhs = h2_rhs(s)
    return {"holds": lhs == rhs, "terms": len(lhs)}


def group_coherence(s: KernelSum, index: int, u) -> bool:
    """u D_a u^{-1} = D_{a u^{-1}} tested on a kernel sum, with u = elements[index]."""
    group = s.ctx.group
    a_new = row_times(vec(*u), group.elements[group.inverse[index]].matrix)
    lhs = s.dunkl(u).act(index)
    rhs = s.act(index).dunkl(a_new)
    return lhs == rhs


def soundness_check(word: Sequence, f: MultiPoly, apply_poly: Callable) -> bool:
    """Compare T(f K)|_{y=0} with the dunkl-core value T f, using K(xw, 0) = 1."""
    s = KernelSum.kernel(_lift(f))
    return ks_apply_operator(word, s).at_y_zero() == apply_poly(f)


def kappa0_check(expr: Callable, witness: MultiPoly | None = None) -> MultiPoly:
    """Apply ``expr`` (a function on Kappa0Exp) to witness exp<x,y>."""
    s = Kappa0Exp.kernel(witness)
    return expr(s).poly


def kappa0_J_of_one() -> dict:
    out = kappa0_check(op_J_square)
    r2x = MultiPoly.norm_sq(ARITY)
    r2y = sum((MultiPoly.var(3 + j, ARITY) ** 2 for j in range(3)), MultiPoly.const(0, ARITY))
    xy = sum(
        (MultiPoly.var(j, ARITY) * MultiPoly.var(3 + j, ARITY) for j in range(3)),
        MultiPoly.const(0, ARITY),
    )
    expected = r2x * r2y - xy * (xy + 2)
    return {"holds": out == expected, "value": out}


def kappa0_commutator(k1: int | None = 3, other: str = "J", k2: int | None = None) -> MultiPoly:
    """[H^(k1), other] applied to exp<x,y>; ``other`` is 'J', 'H' or 'Hk' (with k2)."""
    A = lambda s: op_H_k(s, k1)  # noqa: E731
    if other == "J":
        B = op_J_square
    elif other == "H":
        B = op_hamiltonian
    elif other == "Hk":
        B = lambda s: op_H_k(s, k2)  # noqa: E731
    else:
        raise ValueError("other must be 'J', 'H' or 'Hk'")
    return kappa0_check(lambda s: commutator_on(A, B, s))


def kappa0_H_J_commutator() -> MultiPoly:
    return kappa0_check(lambda s: commutator_on(op_hamiltonian, op_J_square, s))


def invariant_group_constant(p: MultiPoly, ctx: DunklContext | None = None) -> bool:
    """On an invariant p the group terms act as -24 omega^2 (tau+1)(10 kappa+1)^2."""
    from .dunkl import class_sum_op, reflection_sum

    ctx = ctx or default_context()
    c = OMEGA**2 * (TAU + 1)
    total = reflection_sum(ctx, p) * (-32 * c * KAPPA)
    for tag, coeff in h2_class_coefficients():
        total = total - class_sum_op(ctx, tag)(p) * (coeff * KAPPA**2)
    total = total - p * (24 * c)
    return total == p * (-24 * c * (10 * KAPPA + 1) ** 2)


__all__ = [
    "Kappa0Exp",
    "KernelSum",
    "commutator_on",
    "group_coherence",
    "h2_group_terms",
    "h2_rhs",
    "h2_rhs_poly",
    "h2action_kernel_check",
    "invariant_group_constant",
    "kappa0_H_J_commutator",
    "kappa0_J_of_one",
    "kappa0_check",
    "kappa0_commutator",
    "ks_apply_operator",
    "ks_dunkl",
    "op_H_a",
    "op_H_k",
    "op_J",
    "op_J_square",
    "op_class_sum",
    "op_hamiltonian",
    "op_laplacian",
    "op_reflection_sum",
    "op_x_dot_dunkl",
    "soundness_check",
]
