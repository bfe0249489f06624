"""Exact polynomials in x (and optionally y) over Q(tau)(kappa, omega).

A ``MultiPoly`` is stored as one flint polynomial over the shared ring plus a
common denominator in Q[kappa, omega].  ``terms()`` gives the coefficient view
promised by the data model: a graded-lex ordered map from exponent tuples to
``ParamScalar``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

import flint

from . import _ring as R
from ._parse import ParseError, fraction_str, parse_fraction
from .scalars import GoldenNumber, ParamScalar, pochhammer, scalar_poly


class NotDivisible(ArithmeticError):
    """Exact division by a linear form left a nonzero remainder."""


_XY = R.IX + R.IY


def _var_indices(arity: int):
    if arity == 3:
        return R.IX
    if arity == 6:
        return _XY
    raise ValueError(f"arity must be 3 or 6, got {arity}")


def _matrix_of(W):
    m = getattr(W, "matrix", W)
    return [[GoldenNumber.coerce(c) for c in row] for row in m]


def _vector_poly(v) -> flint.fmpq_mpoly:
    """The linear form <x, v> as a ring element."""
    out = R.ZERO
    for i, c in enumerate(v):
        c = GoldenNumber.coerce(c)
        if c:
            out = out + c.to_poly() * R.X[i]
    return R.reduce_tau(out)


class MultiPoly:
    """Polynomial ``num / den`` with ``den`` a monic polynomial in kappa, omega."""

    __slots__ = ("num", "den", "arity")

    def __init__(self, num=None, den=None, arity: int = 3, *, _canonical: bool = False):
        _var_indices(arity)
        if num is None:
            num = R.ZERO
        elif not isinstance(num, flint.fmpq_mpoly):
            num = scalar_poly(num)
        if den is None:
            den = R.ONE
        elif not isinstance(den, flint.fmpq_mpoly):
            den = scalar_poly(den)
        if not _canonical:
            if arity == 3 and not R.depends_only_on(num, (R.IT, R.IK, R.IW) + R.IX):
                raise ValueError("arity-3 polynomial mentions y")
            num, den = R.normalize_fraction(num, den)
        self.num = num
        self.den = den
        self.arity = arity

    # constructors -------------------------------------------------------------
    @staticmethod
    def const(c, arity: int = 3) -> "MultiPoly":
        s = ParamScalar.coerce(c)
        return MultiPoly(s.num, s.den, arity, _canonical=True)

    @staticmethod
    def var(i: int, arity: int = 3) -> "MultiPoly":
        """x_{i+1} for i < 3, y_{i-2} for 3 <= i < 6 (arity 6 only)."""
        return MultiPoly(R.GENS[_var_indices(arity)[i]], R.ONE, arity, _canonical=True)

    @staticmethod
    def linear_form(v, arity: int = 3) -> "MultiPoly":
        return MultiPoly(_vector_poly(v), R.ONE, arity, _canonical=True)

    @staticmethod
    def norm_sq(arity: int = 3) -> "MultiPoly":
        return MultiPoly(sum((x * x for x in R.X), R.ZERO), R.ONE, arity, _canonical=True)

    @staticmethod
    def from_terms(terms: dict, arity: int = 3) -> "MultiPoly":
        out = MultiPoly(R.ZERO, R.ONE, arity, _canonical=True)
        idx = _var_indices(arity)
        for exps, c in terms.items():
            if len(exps) != arity:
                raise ValueError("exponent tuple has the wrong length")
            mono = R.ONE
            for j, e in zip(idx, exps):
                mono = mono * R.GENS[j] ** int(e)
            out = out + MultiPoly.const(c, arity) * MultiPoly(mono, R.ONE, arity, _canonical=True)
        return out

    def _lift(self, o) -> "MultiPoly | None":
        if isinstance(o, MultiPoly):
            if o.arity == self.arity:
                return o
            return MultiPoly(o.num, o.den, max(o.arity, self.arity), _canonical=True)
        try:
            return MultiPoly.const(o, self.arity)
        except TypeError:
            return None

    # arithmetic ---------------------------------------------------------------
    def __add__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        arity = max(self.arity, o.arity)
        if self.den == o.den:
            if self.den.is_one():
                return MultiPoly(self.num + o.num, R.ONE, arity, _canonical=True)
            return MultiPoly(self.num + o.num, self.den, arity)
        return MultiPoly(self.num * o.den + o.num * self.den, self.den * o.den, arity)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(-self.num, self.den, self.arity, _canonical=True)

    def __sub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o = self._lift(o)
        if o is None:
            return NotImplemented
        arity = max(self.arity, o.arity)
        num = R.reduce_tau(self.num * o.num)
        if self.den.is_one() and o.den.is_one():
            return MultiPoly(num, R.ONE, arity, _canonical=True)
        return MultiPoly(num, self.den * o.den, arity)

    __rmul__ = __mul__

    def __truediv__(self, o):
        """Division by a nonzero scalar."""
        if isinstance(o, MultiPoly):
            raise TypeError("polynomial division: use exact_divide_linear")
        s = ParamScalar.coerce(o)
        if s.is_zero():
            raise ZeroDivisionError("division of a polynomial by zero")
        return MultiPoly(self.num * s.den, self.den * s.num, self.arity)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = MultiPoly.const(1, self.arity)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, o):
        o = self._lift(o) if not isinstance(o, MultiPoly) else o
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def scale(self, s) -> "MultiPoly":
        return self * ParamScalar.coerce(s)

    # structure ----------------------------------------------------------------
    def _exps_view(self):
        idx = _var_indices(self.arity)
        groups: dict = {}
        for exps, c in self.num.to_dict().items():
            key = tuple(int(exps[j]) for j in idx)
            param = [0] * len(R.VARS)
            param[R.IT], param[R.IK], param[R.IW] = exps[R.IT], exps[R.IK], exps[R.IW]
            groups.setdefault(key, {})[tuple(param)] = c
        return groups

    def terms(self) -> dict:
        """Graded-lex ordered map exponent tuple -> ParamScalar (no zero entries)."""
        groups = self._exps_view()
        keys = sorted(groups, key=lambda e: (-sum(e), tuple(-v for v in e)))
        return {k: ParamScalar(R.CTX.from_dict(groups[k]), self.den) for k in keys}

    def coefficient(self, exps: Sequence[int]) -> ParamScalar:
        groups = self._exps_view()
        d = groups.get(tuple(exps))
        if d is None:
            return ParamScalar.coerce(0)
        return ParamScalar(R.CTX.from_dict(d), self.den)

    def degree(self) -> int:
        """Total degree in the polynomial variables, -1 for zero."""
        if self.is_zero():
            return -1
        idx = _var_indices(self.arity)
        return int(max(sum(e[j] for j in idx) for e in self.num.monoms()))

    def x_degree(self) -> int:
        if self.is_zero():
            return -1
        return int(max(sum(e[j] for j in R.IX) for e in self.num.monoms()))

    def degrees_present(self, x_only: bool = False) -> list:
        idx = R.IX if x_only else _var_indices(self.arity)
        return sorted({int(sum(e[j] for j in idx)) for e in self.num.monoms()})

    def is_homogeneous(self) -> bool:
        return len(self.degrees_present()) <= 1

    def homogeneous_component(self, k: int, x_only: bool = False) -> "MultiPoly":
        idx = R.IX if x_only else _var_indices(self.arity)
        d = {e: c for e, c in self.num.to_dict().items() if sum(e[j] for j in idx) == k}
        if not d:
            return MultiPoly(R.ZERO, R.ONE, self.arity, _canonical=True)
        return MultiPoly(R.CTX.from_dict(d), self.den, self.arity)

    def homogeneous_components(self, x_only: bool = False) -> dict:
        idx = R.IX if x_only else _var_indices(self.arity)
        parts: dict = {}
        for e, c in self.num.to_dict().items():
            parts.setdefault(int(sum(e[j] for j in idx)), {})[e] = c
        return {
            k: MultiPoly(R.CTX.from_dict(parts[k]), self.den, self.arity)
            for k in sorted(parts)
        }

    def derivative(self, i: int) -> "MultiPoly":
        """Partial derivative in variable i (0..2 for x, 3..5 for y)."""
        j = _XY[i]
        return MultiPoly(self.num.derivative(j), self.den, self.arity, _canonical=True)

    def directional_derivative(self, u) -> "MultiPoly":
        out = R.ZERO
        for i, c in enumerate(u):
            c = GoldenNumber.coerce(c)
            if c:
                out = out + c.to_poly() * self.num.derivative(R.IX[i])
        return MultiPoly(R.reduce_tau(out), self.den, self.arity, _canonical=True)

    def specialize(self, kappa=None, omega=None) -> "MultiPoly":
        sub = {}
        if kappa is not None:
            k = Fraction(kappa)
            sub["k"] = flint.fmpq(k.numerator, k.denominator)
        if omega is not None:
            w = Fraction(omega)
            sub["w"] = flint.fmpq(w.numerator, w.denominator)
        if not sub:
            return self
        den = self.den.subs(sub)
        if den.is_zero():
            from .scalars import DenominatorVanishes

            raise DenominatorVanishes(kappa, omega)
        return MultiPoly(self.num.subs(sub), den, self.arity)

    # maps ---------------------------------------------------------------------
    def substitute(self, W, which: str = "x") -> "MultiPoly":
        """p(xW) with x a row vector; ``which='y'`` acts on the y block instead."""
        m = _matrix_of(W)
        block = R.X if which == "x" else R.Y
        images = list(R.GENS)
        for j in range(3):
            img = R.ZERO
            for i in range(3):
                c = m[i][j]
                if c:
                    img = img + c.to_poly() * block[i]
            images[(R.IX if which == "x" else R.IY)[j]] = R.reduce_tau(img)
        num = R.reduce_tau(self.num.compose(*images))
        return MultiPoly(num, self.den, self.arity, _canonical=True)

    def substitute_vars(self, images: dict) -> "MultiPoly":
        """Replace variables (by index 0..5) with MultiPolys of denominator 1."""
        imgs = list(R.GENS)
        for i, p in images.items():
            if not p.den.is_one():
                raise ValueError("images must have trivial denominator")
            imgs[_XY[i]] = p.num
        arity = max([self.arity] + [p.arity for p in images.values()])
        return MultiPoly(R.reduce_tau(self.num.compose(*imgs)), self.den, arity, _canonical=True)

    def exact_divide_linear(self, v) -> "MultiPoly":
        """q with q * <x, v> = self; raises NotDivisible otherwise."""
        if self.is_zero():
            return self
        L = _vector_poly(v)
        if L.is_zero():
            raise ZeroDivisionError("division by the zero linear form")
        num = self.num
        if R.has_tau(L):
            Lc = R.conj_tau(L)
            num = R.reduce_tau(num * Lc)
            L = R.reduce_tau(L * Lc)
            assert not R.has_tau(L)
        try:
            q = num / L
        except Exception:
            raise NotDivisible(f"polynomial is not divisible by <x,{list(map(str, v))}>") from None
        return MultiPoly(q, self.den, self.arity, _canonical=True)

    def evaluate(self, point) -> "ParamScalar | MultiPoly":
        """Substitute scalars for the x variables (and y variables if given)."""
        idx = _var_indices(self.arity)
        images = list(R.GENS)
        dens = R.ONE
        for j, val in zip(idx, point):
            s = ParamScalar.coerce(val)
            if not s.den.is_one():
                raise ValueError("evaluation points must be polynomial in kappa, omega")
            images[j] = s.num
        num = R.reduce_tau(self.num.compose(*images))
        if len(point) == len(idx):
            return ParamScalar(num, self.den * dens)
        return MultiPoly(num, self.den, self.arity)

    def map_params(self, fn) -> "MultiPoly":
        """Apply a ParamScalar -> ParamScalar function coefficientwise."""
        out = MultiPoly(R.ZERO, R.ONE, self.arity, _canonical=True)
        for exps, c in self.terms().items():
            out = out + MultiPoly.from_terms({exps: fn(c)}, self.arity)
        return out

    # text and JSON --------------------------------------------------------------
    def __str__(self):
        return fraction_str(self.num, self.den)

    def __repr__(self):
        text = str(self)
        if len(text) > 80:
            text = text[:77] + "..."
        return f"MultiPoly({text!r}, arity={self.arity})"

    @staticmethod
    def parse(text: str, arity: int | None = None) -> "MultiPoly":
        num, den = parse_fraction(text)
        if not R.depends_only_on(den, (R.IT, R.IK, R.IW)):
            raise ParseError("denominator must not involve x or y")
        uses_y = not R.depends_only_on(num, (R.IT, R.IK, R.IW) + R.IX)
        if arity is None:
            arity = 6 if uses_y else 3
        elif arity == 3 and uses_y:
            raise ParseError("y variables need arity 6")
        return MultiPoly(num, den, arity, _canonical=True)

    def to_json_obj(self) -> list:
        return [
            {"exponents": list(exps), "coefficient": str(c)} for exps, c in self.terms().items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @staticmethod
    def from_json_obj(obj: Iterable[dict], arity: int | None = None) -> "MultiPoly":
        obj = list(obj)
        if arity is None:
            arity = len(obj[0]["exponents"]) if obj else 3
        return MultiPoly.from_terms(
            {tuple(t["exponents"]): ParamScalar.parse(t["coefficient"]) for t in obj}, arity
        )

    @staticmethod
    def from_json(text: str, arity: int | None = None) -> "MultiPoly":
        return MultiPoly.from_json_obj(json.loads(text), arity)


def X(i: int, arity: int = 3) -> MultiPoly:
    """x_{i+1} as a MultiPoly."""
    return MultiPoly.var(i, arity)


def Yv(i: int) -> MultiPoly:
    """y_{i+1} as an arity-6 MultiPoly."""
    return MultiPoly.var(3 + i, 6)


def poly_substitute(p: MultiPoly, W) -> MultiPoly:
    return p.substitute(W)


def exact_divide_linear(p: MultiPoly, v) -> MultiPoly:
    return p.exact_divide_linear(v)


def homogeneous_component(p: MultiPoly, k: int) -> MultiPoly:
    return p.homogeneous_component(k)


def parse_poly(text: str, arity: int | None = None) -> MultiPoly:
    return MultiPoly.parse(text, arity)


class TruncatedSeries:
    """Power series sum_m c_m r^m in an auxiliary variable, cut after ``order``."""

    __slots__ = ("coefficients", "order")

    def __init__(self, coefficients: Sequence[MultiPoly], order: int):
        coeffs = list(coefficients)[: order + 1]
        arity = coeffs[0].arity if coeffs else 3
        while len(coeffs) < order + 1:
            coeffs.append(MultiPoly.const(0, arity))
        self.coefficients = coeffs
        self.order = order

    def __getitem__(self, m: int) -> MultiPoly:
        return self.coefficients[m]

    def __len__(self):
        return len(self.coefficients)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_product(self, other)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and all(a == b for a, b in zip(self.coefficients, other.coefficients))
        )


def series_product(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    if s.order != t.order:
        raise ValueError("series must share the truncation order")
    n = s.order
    out = []
    for m in range(n + 1):
        acc = MultiPoly.const(0, s[0].arity)
        for i in range(m + 1):
            if s[i].is_zero() or t[m - i].is_zero():
                continue
            acc = acc + s[i] * t[m - i]
        out.append(acc)
    return TruncatedSeries(out, n)


def binomial_series(u: MultiPoly, kappa, order: int) -> TruncatedSeries:
    """(1 - r u)^(-kappa) = sum_m (kappa)_m / m! u^m r^m, truncated."""
    coeffs = []
    power = MultiPoly.const(1, u.arity)
    fact = 1
    for m in range(order + 1):
        if m:
            power = power * u
            fact *= m
        coeffs.append(power * (pochhammer(kappa, m) / fact))
    return TruncatedSeries(coeffs, order)


def series_product_all(factors: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """Balanced-tree product of several series."""
    items = list(factors)
    if not items:
        raise ValueError("empty product")
    while len(items) > 1:
        nxt = []
        for i in range(0, len(items) - 1, 2):
            nxt.append(series_product(items[i], items[i + 1]))
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


__all__ = [
    "MultiPoly",
    "NotDivisible",
    "TruncatedSeries",
    "X",
    "Yv",
    "binomial_series",
    "exact_divide_linear",
    "homogeneous_component",
    "parse_poly",
    "poly_substitute",
    "series_product",
    "series_product_all",
]
