"""Dunkl calculus for H3 on exact polynomials.

Everything here is a pure function of a ``DunklContext`` and ``MultiPoly``
inputs.  The context precomputes, for each positive root v, the substitution
images of x -> x sigma_v and the data needed to divide exactly by <x, v>.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Sequence

import flint

from . import _ring as R
from .group import (
    H3Group,
    RootSystemH3,
    VERTICES,
    dot,
    h3_group,
    reflection_matrix,
    vec,
)
from .polyalg import MultiPoly, NotDivisible
from .scalars import (
    KAPPA,
    OMEGA,
    GoldenNumber,
    ParamScalar,
    pochhammer,
)

N_DIM = 3
E_BASIS = (vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1))


class NotHomogeneous(ValueError):
    """The operation needs a homogeneous polynomial."""


class NotInteger(ValueError):
    """pairing_L2_moments needs a nonnegative integer multiplicity."""


@dataclass(frozen=True)
class _RootData:
    v: tuple
    images: tuple  # compose images for x -> x sigma_v (x block only)
    linear: flint.fmpq_mpoly  # <x, v>
    conj: flint.fmpq_mpoly | None  # conjugate linear form when <x,v> involves tau
    norm: flint.fmpq_mpoly  # rational divisor after multiplying by conj
    norm_sq: GoldenNumber  # |v|^2


def _root_data(v) -> _RootData:
    S = reflection_matrix(v).matrix
    images = list(R.GENS)
    for j in range(3):
        img = R.ZERO
        for i in range(3):
            if S[i][j]:
                img = img + S[i][j].to_poly() * R.X[i]
        images[R.IX[j]] = R.reduce_tau(img)
    L = R.ZERO
    for i, c in enumerate(v):
        if c:
            L = L + c.to_poly() * R.X[i]
    L = R.reduce_tau(L)
    if R.has_tau(L):
        Lc = R.conj_tau(L)
        nrm = R.reduce_tau(L * Lc)
    else:
        Lc, nrm = None, L
    return _RootData(tuple(v), tuple(images), L, Lc, nrm, dot(v, v))


@dataclass
class DunklContext:
    """Root system, group and multiplicity for the Dunkl calculus.

    ``kappa`` defaults to the formal parameter; pass a rational to specialize.
    """

    kappa: ParamScalar = field(default_factory=lambda: KAPPA)
    roots: RootSystemH3 = field(default_factory=RootSystemH3)

    def __post_init__(self):
        self.kappa = ParamScalar.coerce(self.kappa)
        if not self.kappa.is_polynomial():
            raise ValueError("kappa must be polynomial in the formal parameters")
        self._k = self.kappa.num
        self._roots = tuple(_root_data(v) for v in self.roots.positive_roots)

    @property
    def N(self) -> int:
        return N_DIM

    @property
    def gamma(self) -> ParamScalar:
        return len(self.roots.positive_roots) * self.kappa

    @cached_property
    def group(self) -> H3Group:
        return h3_group()

    @property
    def root_data(self):
        return self._roots

    def with_kappa(self, kappa) -> "DunklContext":
        return DunklContext(ParamScalar.coerce(kappa), self.roots)

    def E(self, n: int) -> ParamScalar:
        """Oscillator energy omega (N + 2 gamma + 2n)."""
        return OMEGA * (N_DIM + 2 * self.gamma + 2 * n)


_DEFAULT: DunklContext | None = None


def default_context() -> DunklContext:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = DunklContext()
    return _DEFAULT


# ---------------------------------------------------------------------------
# raw helpers on numerators (denominator is carried unchanged)


def _reflect_raw(num, rd: _RootData):
    return R.reduce_tau(num.compose(*rd.images))


def _divide_raw(num, rd: _RootData):
    if num.is_zero():
        return num
    if rd.conj is not None:
        num = R.reduce_tau(num * rd.conj)
    try:
        return num / rd.norm
    except Exception:
        raise NotDivisible(f"not divisible by <x,{[str(c) for c in rd.v]}>") from None


def _divided_differences(ctx: DunklContext, num) -> list:
    """(p - p o sigma_v) / <x, v> for every positive root."""
    out = []
    for rd in ctx._roots:
        diff = num - _reflect_raw(num, rd)
        out.append(_divide_raw(diff, rd) if not diff.is_zero() else R.ZERO)
    return out


def _wrap(p: MultiPoly, num) -> MultiPoly:
    return MultiPoly(num, p.den, p.arity, _canonical=True)


def _dir_from_dd(ctx, num, dds, u) -> flint.fmpq_mpoly:
    u = vec(*u)
    out = R.ZERO
    for i in range(3):
        if u[i]:
            out = out + u[i].to_poly() * num.derivative(R.IX[i])
    acc = R.ZERO
    for rd, d in zip(ctx._roots, dds):
        if d.is_zero():
            continue
        c = dot(u, rd.v)
        if c:
            acc = acc + c.to_poly() * d
    if not acc.is_zero():
        out = out + ctx._k * acc
    return R.reduce_tau(out)


def dunkl(ctx: DunklContext, p: MultiPoly, u) -> MultiPoly:
    """Directional Dunkl operator <u, nabla_kappa> p."""
    if p.is_zero():
        return p
    dds = _divided_differences(ctx, p.num)
    return _wrap(p, _dir_from_dd(ctx, p.num, dds, u))


def dunkl_i(ctx: DunklContext, p: MultiPoly, i: int) -> MultiPoly:
    return dunkl(ctx, p, E_BASIS[i])


def dunkl_gradient(ctx: DunklContext, p: MultiPoly) -> list:
    """(D_1 p, D_2 p, D_3 p) sharing one set of divided differences."""
    if p.is_zero():
        return [p, p, p]
    dds = _divided_differences(ctx, p.num)
    return [_wrap(p, _dir_from_dd(ctx, p.num, dds, e)) for e in E_BASIS]


def _laplacian_raw(ctx: DunklContext, num):
    if num.is_zero():
        return num
    grads = [num.derivative(j) for j in R.IX]
    out = R.ZERO
    for j, g in zip(R.IX, grads):
        out = out + g.derivative(j)
    acc = R.ZERO
    for rd in ctx._roots:
        diff = num - _reflect_raw(num, rd)
        d = _divide_raw(diff, rd) if not diff.is_zero() else R.ZERO
        gv = R.ZERO
        for i in range(3):
            if rd.v[i]:
                gv = gv + rd.v[i].to_poly() * grads[i]
        term = R.reduce_tau(2 * gv - rd.norm_sq.to_poly() * d)
        acc = acc + _divide_raw(term, rd)
    if not acc.is_zero():
        out = out + ctx._k * acc
    return R.reduce_tau(out)


def dunkl_laplacian(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """Delta_kappa p via the closed form with one- and two-fold difference quotients."""
    return _wrap(p, _laplacian_raw(ctx, p.num))


def dunkl_laplacian_by_squares(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """Delta_kappa p as the sum of D_i^2 p (slower reference path)."""
    out = MultiPoly.const(0, p.arity)
    for i, g in enumerate(dunkl_gradient(ctx, p)):
        out = out + dunkl_i(ctx, g, i)
    return out


def laplacian_power(ctx: DunklContext, p: MultiPoly, j: int) -> MultiPoly:
    for _ in range(j):
        if p.is_zero():
            break
        p = dunkl_laplacian(ctx, p)
    return p


def euler(p: MultiPoly) -> MultiPoly:
    """delta = <x, nabla>, the degree operator in x."""
    out = R.ZERO
    for j, x in zip(R.IX, R.X):
        out = out + x * p.num.derivative(j)
    return _wrap(p, out)


def x_dot_dunkl(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """<x, nabla_kappa> p."""
    if p.is_zero():
        return p
    dds = _divided_differences(ctx, p.num)
    out = R.ZERO
    for e, x in zip(E_BASIS, R.X):
        out = out + x * _dir_from_dd(ctx, p.num, dds, e)
    return _wrap(p, R.reduce_tau(out))


def reflect(ctx: DunklContext, p: MultiPoly, root_index: int) -> MultiPoly:
    return _wrap(p, _reflect_raw(p.num, ctx._roots[root_index]))


def reflection_sum(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """sum over positive roots of p o sigma_v."""
    out = R.ZERO
    for rd in ctx._roots:
        out = out + _reflect_raw(p.num, rd)
    return _wrap(p, out)


def group_sum(ctx: DunklContext, p: MultiPoly, members: Sequence[int]) -> MultiPoly:
    """sum over the listed group elements w of p(xw)."""
    out = MultiPoly.const(0, p.arity)
    for i in members:
        out = out + p.substitute(ctx.group.elements[i])
    return out


# ---------------------------------------------------------------------------
# harmonic analysis


def _require_homogeneous(p: MultiPoly) -> int:
    degs = p.degrees_present(x_only=True)
    if len(degs) > 1:
        raise NotHomogeneous(f"polynomial has components in degrees {degs}")
    return degs[0] if degs else 0


def harmonic_project(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """Lambda_n p, the harmonic component of a homogeneous p of degree n."""
    n = _require_homogeneous(p)
    if p.is_zero():
        return p
    base = -Fraction(N_DIM, 2) - ctx.gamma - n + 2
    r2 = MultiPoly.norm_sq(p.arity)
    out = p
    lap, rpow = p, MultiPoly.const(1, p.arity)
    fact = 1
    for j in range(1, n // 2 + 1):
        lap = dunkl_laplacian(ctx, lap)
        if lap.is_zero():
            break
        rpow = rpow * r2
        fact *= 4 * j
        out = out + (rpow * lap) * (1 / (fact * pochhammer(base, j)))
    return out


def harmonic_decompose(ctx: DunklContext, p: MultiPoly) -> list:
    """[(j, h_j)] with p = sum_j |x|^{2j} h_j and each h_j harmonic of degree n - 2j."""
    n = _require_homogeneous(p)
    parts = []
    lap = p
    fact = 1
    for j in range(0, n // 2 + 1):
        if j:
            lap = dunkl_laplacian(ctx, lap)
            fact *= 4 * j
        if lap.is_zero():
            break
        c = 1 / (fact * pochhammer(Fraction(N_DIM, 2) + ctx.gamma + n - 2 * j, j))
        h = harmonic_project(ctx, lap) * c
        if not h.is_zero():
            parts.append((j, h))
    return parts


def heat_exp(ctx: DunklContext, p: MultiPoly, sign: int = 1) -> MultiPoly:
    """exp(sign * Delta_kappa / (4 omega)) p, a finite sum."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    out = p
    term = p
    j = 0
    while True:
        j += 1
        term = dunkl_laplacian(ctx, term)
        if term.is_zero():
            return out
        term = term * (ParamScalar.coerce(sign) / (4 * j * OMEGA))
        out = out + term


def E_operator(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    return heat_exp(ctx, p, 1)


# ---------------------------------------------------------------------------
# pairings


def _apply_monomials(ctx: DunklContext, p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """p(nabla_kappa) q for x-only p, applying D3^c, then D2^b, then D1^a.

    Intermediate results are memoized by partial exponent and each node
    computes its divided differences once for all three directions.
    """
    nodes: dict = {(0, 0, 0): q.num}
    dd_cache: dict = {}

    def grad_dir(key, i):
        num = nodes[key]
        if num.is_zero():
            return num
        dds = dd_cache.get(key)
        if dds is None:
            dds = _divided_differences(ctx, num)
            dd_cache[key] = dds
        return _dir_from_dd(ctx, num, dds, E_BASIS[i])

    def get(key):
        if key in nodes:
            return nodes[key]
        a, b, c = key
        if a > 0:
            prev, i = (a - 1, b, c), 0
        elif b > 0:
            prev, i = (0, b - 1, c), 1
        else:
            prev, i = (0, 0, c - 1), 2
        get(prev)
        nodes[key] = grad_dir(prev, i)
        return nodes[key]

    total = MultiPoly.const(0, q.arity)
    terms = p.terms()
    for exps in sorted(terms, key=lambda e: (e[2], e[1], e[0])):
        r = get(tuple(exps))
        if r.is_zero():
            continue
        total = total + _wrap(q, r) * terms[exps]
    return total


def _constant_value(p: MultiPoly) -> ParamScalar:
    return p.evaluate([0] * p.arity) if p.arity == 3 else p.evaluate([0] * 6)


def pairing_kw(ctx: DunklContext, p: MultiPoly, q: MultiPoly) -> ParamScalar:
    """<p, q>_{kappa, omega} = p(nabla_kappa / (2 omega)) q at x = 0."""
    pc = p.homogeneous_components()
    qc = q.homogeneous_components()
    total = ParamScalar.coerce(0)
    for n in sorted(set(pc) & set(qc)):
        a, b = pc[n], qc[n]
        # apply whichever side has fewer monomials as the operator
        if len(b.num) < len(a.num):
            a, b = b, a
        val = _constant_value(_apply_monomials(ctx, a, b))
        total = total + val / (2 * OMEGA) ** n
    return total


def apply_product_of_directions(ctx: DunklContext, dirs: Sequence, q: MultiPoly) -> MultiPoly:
    """prod_u <u, nabla_kappa> applied to q, one direction at a time."""
    for u in dirs:
        q = dunkl(ctx, q, u)
        if q.is_zero():
            break
    return q


def pairing_L2(ctx: DunklContext, p: MultiPoly, q: MultiPoly) -> ParamScalar:
    """<p, q>_2 computed as <E p, E q>_{kappa, omega}."""
    return pairing_kw(ctx, heat_exp(ctx, p, 1), heat_exp(ctx, q, 1))


def norm_L2(ctx: DunklContext, p: MultiPoly) -> ParamScalar:
    ep = heat_exp(ctx, p, 1)
    return pairing_kw(ctx, ep, ep)


_H2_CACHE: dict = {}


def weight_square(kappa0: int) -> flint.fmpq_mpoly:
    """h_{kappa0}^2 = prod_v <x, v>^(2 kappa0) as a ring element."""
    if kappa0 not in _H2_CACHE:
        prod = R.ONE
        for v in RootSystemH3().positive_roots:
            prod = R.reduce_tau(prod * MultiPoly.linear_form(v).num)
        _H2_CACHE[kappa0] = R.reduce_tau(prod ** (2 * kappa0))
    return _H2_CACHE[kappa0]


def _half_poch(m: int) -> Fraction:
    out = Fraction(1)
    for i in range(m):
        out *= Fraction(1, 2) + i
    return out


def _moment_value(num) -> ParamScalar:
    """Gaussian moment functional, normalized so the constant 1 maps to 1."""
    total = ParamScalar.coerce(0)
    by_power: dict = {}
    for exps, c in num.to_dict().items():
        alpha = [exps[j] for j in R.IX]
        if any(a % 2 for a in alpha):
            continue
        m = 1
        for a in alpha:
            m *= _half_poch(a // 2)
        key = sum(alpha) // 2
        param = [0] * len(R.VARS)
        param[R.IT], param[R.IK], param[R.IW] = exps[R.IT], exps[R.IK], exps[R.IW]
        coeff = R.const(m) * R.CTX.from_dict({tuple(param): c})
        by_power[key] = by_power.get(key, R.ZERO) + coeff
    for half_deg, coeff in by_power.items():
        total = total + ParamScalar(coeff, R.W**half_deg)
    return total


def pairing_L2_moments(ctx: DunklContext, p: MultiPoly, q: MultiPoly, kappa0) -> ParamScalar:
    """Integral-side oracle for <p, q>_2 at integer kappa0 with omega symbolic."""
    if isinstance(kappa0, bool) or int(kappa0) != kappa0 or kappa0 < 0:
        raise NotInteger(kappa0)
    kappa0 = int(kappa0)
    pq = p.specialize(kappa=kappa0) * q.specialize(kappa=kappa0)
    h2 = weight_square(kappa0)
    num = R.reduce_tau(pq.num * h2)
    val = _moment_value(num) / ParamScalar(R.ONE, pq.den)
    return val / _moment_value(h2)


# ---------------------------------------------------------------------------
# oscillator, angular momentum, ladder operators


def hamiltonian_tilde(ctx: DunklContext, p: MultiPoly) -> MultiPoly:
    """-Delta_kappa p + omega (N + 2 gamma + 2 delta) p."""
    return -dunkl_laplacian(ctx, p) + (p * (N_DIM + 2 * ctx.gamma) + euler(p) * 2) * OMEGA


def angular_J(ctx: DunklContext, a, b, p: MultiPoly) -> MultiPoly:
    """J_{a,b} p = <a,x><b,nabla_kappa> p - <b,x><a,nabla_kappa> p."""
    if p.is_zero():
        return p
    dds = _divided_differences(ctx, p.num)
    la, lb = MultiPoly.linear_form(a, p.arity), MultiPoly.linear_form(b, p.arity)
    db = _wrap(p, _dir_from_dd(ctx, p.num, dds, b))
    da = _wrap(p, _dir_from_dd(ctx, p.num, dds, a))
    return la * db - lb * da


def angular_J_swapped(ctx: DunklContext, a, b, p: MultiPoly) -> MultiPoly:
    """<b,nabla_kappa>(<a,x> p) - <a,nabla_kappa>(<b,x> p)."""
    la, lb = MultiPoly.linear_form(a, p.arity), MultiPoly.linear_form(b, p.arity)
    return dunkl(ctx, la * p, b) - dunkl(ctx, lb * p, a)


def angular_J_square(ctx: DunklContext, p: MultiPoly, method: str = "closed") -> MultiPoly:
    """Total angular momentum square, by its definition or by the closed form."""
    if method == "definition":
        out = MultiPoly.const(0, p.arity)
        for i in range(3):
            for j in range(i + 1, 3):
                a, b = E_BASIS[i], E_BASIS[j]
                out = out + angular_J(ctx, a, b, angular_J(ctx, a, b, p))
        return out
    if method != "closed":
        raise ValueError("method must be 'closed' or 'definition'")
    Ep = x_dot_dunkl(ctx, p)
    r2 = MultiPoly.norm_sq(p.arity)
    return (
        r2 * dunkl_laplacian(ctx, p)
        - x_dot_dunkl(ctx, Ep)
        - Ep * (N_DIM - 2)
        - reflection_sum(ctx, Ep) * (2 * ctx.kappa)
    )


def raise_lower(ctx: DunklContext, a, sign: int, p: MultiPoly) -> MultiPoly:
    """sign=+1: lowering <a,nabla_kappa> p; sign=-1: raising 2 omega <a,x> p - <a,nabla_kappa> p."""
    low = dunkl(ctx, p, a)
    if sign == 1:
        return low
    if sign == -1:
        return MultiPoly.linear_form(a, p.arity) * p * (2 * OMEGA) - low
    raise ValueError("sign must be +1 or -1")


def H_a_tilde(ctx: DunklContext, a, p: MultiPoly) -> MultiPoly:
    """omega (<a,x><a,nabla_kappa> + <a,nabla_kappa><a,x>) p - <a,nabla_kappa>^2 p."""
    la = MultiPoly.linear_form(a, p.arity)
    d = dunkl(ctx, p, a)
    return (la * d + dunkl(ctx, la * p, a)) * OMEGA - dunkl(ctx, d, a)


def H_k_tilde(ctx: DunklContext, k: int, p: MultiPoly, points=None) -> MultiPoly:
    """sum over y in I_+ of (H_y tilde)^k p."""
    if k < 1:
        raise ValueError("k must be at least 1")
    pts = VERTICES.I_plus if points is None else points
    out = MultiPoly.const(0, p.arity)
    for y in pts:
        r = p
        for _ in range(k):
            r = H_a_tilde(ctx, y, r)
        out = out + r
    return out


def laguerre(m: int, alpha, s: MultiPoly) -> MultiPoly:
    """L_m^(alpha)(s) = sum_j (alpha+1+j)_{m-j} (-m)_j s^j / (j! m!)."""
    if m < 0:
        raise ValueError("Laguerre degree must be nonnegative")
    alpha = ParamScalar.coerce(alpha)
    out = MultiPoly.const(0, s.arity)
    spow = MultiPoly.const(1, s.arity)
    mfact = 1
    for i in range(2, m + 1):
        mfact *= i
    jfact = 1
    for j in range(m + 1):
        if j:
            spow = spow * s
            jfact *= j
        c = pochhammer(alpha + 1 + j, m - j) * pochhammer(-m, j) / (jfact * mfact)
        out = out + spow * c
    return out


def omega_r2(arity: int = 3) -> MultiPoly:
    """omega |x|^2, the usual Laguerre argument."""
    return MultiPoly.norm_sq(arity) * OMEGA


def wavefunction_expand(ctx: DunklContext, p: MultiPoly, n: int) -> list:
    """Laguerre-harmonic expansion of an E_n eigenpolynomial from its top part.

    Returns [(j, coefficient, L_j(omega|x|^2), harmonic)] whose weighted sum of
    products reconstructs p.
    """
    top = p.homogeneous_component(n, x_only=True)
    out = []
    lap = top
    for j in range(n // 2 + 1):
        if j:
            lap = dunkl_laplacian(ctx, lap)
        if lap.is_zero():
            break
        base = Fraction(N_DIM, 2) + ctx.gamma + n - 2 * j
        coeff = ParamScalar.coerce((-1) ** j) / ((4 * OMEGA) ** j * pochhammer(base, j))
        L = laguerre(j, base - 1, omega_r2(p.arity))
        out.append((j, coeff, L, harmonic_project(ctx, lap)))
    return out


# ---------------------------------------------------------------------------
# operator values


class Operator:
    """Linear map on MultiPoly with a name; ``A @ B`` is composition A(B(p))."""

    def __init__(self, fn: Callable[[MultiPoly], MultiPoly], name: str):
        self.fn = fn
        self.name = name

    def __call__(self, p: MultiPoly) -> MultiPoly:
        return self.fn(p)

    def __matmul__(self, other: "Operator") -> "Operator":
        return Operator(lambda p: self(other(p)), f"({self.name})({other.name})")

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(lambda p: self(p) + other(p), f"{self.name} + {other.name}")

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator(lambda p: self(p) - other(p), f"{self.name} - {other.name}")

    def scaled(self, c) -> "Operator":
        c = ParamScalar.coerce(c)
        return Operator(lambda p: self(p) * c, f"({c})*{self.name}")

    def power(self, k: int) -> "Operator":
        def run(p):
            for _ in range(k):
                p = self(p)
            return p

        return Operator(run, f"{self.name}^{k}")

    def __repr__(self):
        return f"Operator({self.name})"


def commutator(A: Operator, B: Operator) -> Operator:
    return Operator(lambda p: A(B(p)) - B(A(p)), f"[{A.name}, {B.name}]")


def identity_op() -> Operator:
    return Operator(lambda p: p, "1")


def mult_op(f: MultiPoly, name: str) -> Operator:
    return Operator(lambda p: f * p, name)


def dunkl_op(ctx: DunklContext, u, name: str | None = None) -> Operator:
    return Operator(lambda p: dunkl(ctx, p, u), name or f"<{','.join(map(str, u))},D>")


def laplacian_op(ctx: DunklContext) -> Operator:
    return Operator(lambda p: dunkl_laplacian(ctx, p), "Delta_k")


def hamiltonian_op(ctx: DunklContext) -> Operator:
    return Operator(lambda p: hamiltonian_tilde(ctx, p), "Htilde")


def J_op(ctx: DunklContext, method: str = "closed") -> Operator:
    return Operator(lambda p: angular_J_square(ctx, p, method), "J")


def H_a_op(ctx: DunklContext, a) -> Operator:
    return Operator(lambda p: H_a_tilde(ctx, a, p), f"H_{a}")


def H_k_op(ctx: DunklContext, k: int) -> Operator:
    return Operator(lambda p: H_k_tilde(ctx, k, p), f"H^({k})")


def group_element_op(ctx: DunklContext, index: int) -> Operator:
    g = ctx.group.elements[index]
    return Operator(lambda p: p.substitute(g), f"w[{index}]")


def class_sum_op(ctx: DunklContext, tag: str) -> Operator:
    members = ctx.group.class_members(tag)
    return Operator(lambda p: group_sum(ctx, p, members), f"sum({tag})")


__all__ = [
    "DunklContext",
    "E_BASIS",
    "E_operator",
    "H_a_op",
    "H_a_tilde",
    "H_k_op",
    "H_k_tilde",
    "J_op",
    "NotHomogeneous",
    "NotInteger",
    "Operator",
    "angular_J",
    "angular_J_square",
    "angular_J_swapped",
    "apply_product_of_directions",
    "class_sum_op",
    "commutator",
    "default_context",
    "dunkl",
    "dunkl_gradient",
    "dunkl_i",
    "dunkl_laplacian",
    "dunkl_laplacian_by_squares",
    "dunkl_op",
    "euler",
    "group_element_op",
    "group_sum",
    "hamiltonian_op",
    "hamiltonian_tilde",
    "harmonic_decompose",
    "harmonic_project",
    "heat_exp",
    "identity_op",
    "laguerre",
    "laplacian_op",
    "laplacian_power",
    "mult_op",
    "norm_L2",
    "omega_r2",
    "pairing_L2",
    "pairing_L2_moments",
    "pairing_kw",
    "raise_lower",
    "reflect",
    "reflection_sum",
    "wavefunction_expand",
    "weight_square",
    "x_dot_dunkl",
]
