"""Shared flint polynomial ring and the reductions every exact type relies on.

All exact objects live in one ring Q[t, k, w, x1, x2, x3, y1, y2, y3]:
``t`` stands for the golden ratio and is kept reduced modulo t^2 - t - 1,
``k`` and ``w`` are the formal parameters kappa and omega.  Denominators are
kept rationalized, i.e. free of ``t``.
"""

from __future__ import annotations

from fractions import Fraction

import flint

VARS = ("t", "k", "w", "x1", "x2", "x3", "y1", "y2", "y3")
CTX = flint.fmpq_mpoly_ctx.get(VARS, "deglex")
GENS = CTX.gens()
T, K, W = GENS[0], GENS[1], GENS[2]
X = GENS[3:6]
Y = GENS[6:9]
IT, IK, IW = 0, 1, 2
IX = (3, 4, 5)
IY = (6, 7, 8)

ZERO = CTX.constant(0)
ONE = CTX.constant(1)
TAU_MODULUS = T * T - T - 1
_CONJ_IMAGES = (1 - T,) + tuple(GENS[1:])


def const(c) -> flint.fmpq_mpoly:
    if isinstance(c, Fraction):
        c = flint.fmpq(c.numerator, c.denominator)
    return CTX.constant(c)


def to_fraction(c) -> Fraction:
    c = flint.fmpq(c)
    return Fraction(int(c.p), int(c.q))


def reduce_tau(p: flint.fmpq_mpoly) -> flint.fmpq_mpoly:
    """Reduce ``p`` modulo t^2 - t - 1 so that deg_t(p) <= 1."""
    if p.degrees()[IT] <= 1:
        return p
    return divmod(p, TAU_MODULUS)[1]


def conj_tau(p: flint.fmpq_mpoly) -> flint.fmpq_mpoly:
    """Galois conjugate t -> 1 - t of an already reduced polynomial."""
    if p.degrees()[IT] == 0:
        return p
    return reduce_tau(p.compose(*_CONJ_IMAGES))


def has_tau(p: flint.fmpq_mpoly) -> bool:
    return p.degrees()[IT] > 0


def normalize_fraction(num, den):
    """Canonical (num, den): den free of t, monic in deglex, gcd(num, den) = 1."""
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    den = reduce_tau(den)
    if has_tau(den):
        c = conj_tau(den)
        num = num * c
        den = reduce_tau(den * c)
    num = reduce_tau(num)
    if num.is_zero():
        return ZERO, ONE
    if not den.is_constant():
        g = num.gcd(den)
        if not g.is_one():
            num = num / g
            den = den / g
    lc = den.leading_coefficient()
    if lc != 1:
        num = num / lc
        den = den / lc
    return num, den


def split_tau(p: flint.fmpq_mpoly):
    """Write reduced ``p`` as p0 + t*p1 and return (p0, p1)."""
    d0: dict = {}
    d1: dict = {}
    for exps, c in p.to_dict().items():
        if exps[IT] == 0:
            d0[exps] = c
        else:
            e = list(exps)
            e[IT] = 0
            d1[tuple(e)] = c
    return CTX.from_dict(d0), CTX.from_dict(d1)


def depends_only_on(p: flint.fmpq_mpoly, indices) -> bool:
    degs = p.degrees()
    allowed = set(indices)
    return all(d <= 0 for i, d in enumerate(degs) if i not in allowed)
