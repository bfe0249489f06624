"""Exact scalars: the golden field Q(tau) and rational functions in kappa, omega.

``GoldenNumber`` is a small pure-Python value type.  ``ParamScalar`` wraps a
canonical (numerator, denominator) pair of flint polynomials in (t, k, w),
with ``t`` reduced modulo t^2 - t - 1 and the denominator free of ``t``,
monic and coprime to the numerator.  Canonical form makes ``==`` and
``hash`` structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import flint

from . import _ring as R
from ._parse import ParseError, fraction_str, parse_fraction

Rational = Fraction

SQRT5 = 5 ** 0.5
TAU_FLOAT = (1 + SQRT5) / 2


class DenominatorVanishes(ZeroDivisionError):
    """A ParamScalar was evaluated where its denominator is zero."""

    def __init__(self, kappa, omega):
        super().__init__(f"denominator vanishes at kappa={kappa}, omega={omega}")
        self.kappa = kappa
        self.omega = omega


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class GoldenNumber:
    """The number a + b*tau with tau^2 = tau + 1."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", _frac(self.a))
        object.__setattr__(self, "b", _frac(self.b))

    @staticmethod
    def coerce(x) -> "GoldenNumber":
        if isinstance(x, GoldenNumber):
            return x
        return GoldenNumber(_frac(x), Fraction(0))

    def __add__(self, o):
        if isinstance(o, ParamScalar):
            return NotImplemented
        try:
            o = GoldenNumber.coerce(o)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __sub__(self, o):
        if isinstance(o, ParamScalar):
            return NotImplemented
        try:
            o = GoldenNumber.coerce(o)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, ParamScalar):
            return NotImplemented
        try:
            o = GoldenNumber.coerce(o)
        except TypeError:
            return NotImplemented
        return golden_mul(self, o)

    __rmul__ = __mul__

    def conj(self) -> "GoldenNumber":
        """Galois conjugate, tau -> 1 - tau."""
        return GoldenNumber(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a + self.a * self.b - self.b * self.b

    def inverse(self) -> "GoldenNumber":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(tau)")
        c = self.conj()
        return GoldenNumber(c.a / n, c.b / n)

    def __truediv__(self, o):
        if isinstance(o, ParamScalar):
            return NotImplemented
        try:
            o = GoldenNumber.coerce(o)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, o):
        return GoldenNumber.coerce(o) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = ONE_G, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, o):
        if isinstance(o, GoldenNumber):
            return self.a == o.a and self.b == o.b
        if isinstance(o, (int, Fraction)):
            return self.b == 0 and self.a == o
        if isinstance(o, ParamScalar):
            return o == self
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def sign(self) -> int:
        """Exact sign of a + b*tau, via 2(a + b*tau) = (2a + b) + b*sqrt5."""
        c, d = 2 * self.a + self.b, self.b
        if c >= 0 and d >= 0:
            return 0 if (c == 0 and d == 0) else 1
        if c <= 0 and d <= 0:
            return -1
        # opposite signs: compare c^2 with 5 d^2
        lhs, rhs = c * c, 5 * d * d
        if lhs == rhs:
            return 0
        return (1 if c > 0 else -1) if lhs > rhs else (1 if d > 0 else -1)

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __le__(self, o):
        return (self - o).sign() <= 0

    def __gt__(self, o):
        return (self - o).sign() > 0

    def __ge__(self, o):
        return (self - o).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * TAU_FLOAT

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_rational(self) -> bool:
        return self.b == 0

    def to_poly(self) -> flint.fmpq_mpoly:
        return R.const(self.a) + R.const(self.b) * R.T

    def __str__(self):
        return fraction_str(self.to_poly(), R.ONE)

    def __repr__(self):
        return f"GoldenNumber({self.a}, {self.b})"

    @staticmethod
    def parse(text: str) -> "GoldenNumber":
        s = ParamScalar.parse(text)
        g = s.to_golden()
        if g is None:
            raise ParseError(f"{text!r} is not a constant of Q(tau)")
        return g


def golden_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    return GoldenNumber(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b)


ONE_G = GoldenNumber(1, 0)
ZERO_G = GoldenNumber(0, 0)
TAU = GoldenNumber(0, 1)
TAU_INV = GoldenNumber(-1, 1)

Scalarish = Union[int, Fraction, GoldenNumber, "ParamScalar"]


def scalar_poly(x) -> flint.fmpq_mpoly:
    """Ring element for an int, Fraction or GoldenNumber."""
    if isinstance(x, GoldenNumber):
        return x.to_poly()
    return R.const(_frac(x))


class ParamScalar:
    """Element of Q(tau)(kappa, omega) in canonical form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=None, den=None, *, _canonical: bool = False):
        if num is None:
            num = R.ZERO
        elif not isinstance(num, flint.fmpq_mpoly):
            num = scalar_poly(num)
        if den is None:
            den = R.ONE
        elif not isinstance(den, flint.fmpq_mpoly):
            den = scalar_poly(den)
        if not _canonical:
            if not R.depends_only_on(num, (R.IT, R.IK, R.IW)) or not R.depends_only_on(
                den, (R.IT, R.IK, R.IW)
            ):
                raise ValueError("ParamScalar may only involve tau, kappa and omega")
            num, den = R.normalize_fraction(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def coerce(x) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return ParamScalar(R.const(_frac(x)), R.ONE, _canonical=True)
        if isinstance(x, GoldenNumber):
            return ParamScalar(x.to_poly(), R.ONE, _canonical=True)
        raise TypeError(f"cannot coerce {x!r} to ParamScalar")

    @staticmethod
    def _try(x):
        try:
            return ParamScalar.coerce(x)
        except TypeError:
            return None

    # arithmetic -------------------------------------------------------------
    def __add__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return ParamScalar(self.num + o.num, R.ONE, _canonical=True)
        if self.den == o.den:
            return ParamScalar(self.num + o.num, self.den)
        return ParamScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar(-self.num, self.den, _canonical=True)

    def __sub__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return ParamScalar(R.reduce_tau(self.num * o.num), R.ONE, _canonical=True)
        return ParamScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "ParamScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero ParamScalar")
        return ParamScalar(self.den, self.num)

    def __truediv__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero ParamScalar")
        return ParamScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        return ParamScalar(self.num**e, self.den**e)

    # comparison -------------------------------------------------------------
    def __eq__(self, o):
        o = ParamScalar._try(o)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_constant(self) -> bool:
        return self.den.is_one() and R.depends_only_on(self.num, (R.IT,))

    def to_golden(self):
        """The GoldenNumber value if this scalar is free of kappa and omega, else None."""
        if not self.is_constant():
            return None
        p0, p1 = R.split_tau(self.num)
        a = R.to_fraction(p0.leading_coefficient()) if not p0.is_zero() else Fraction(0)
        b = R.to_fraction(p1.leading_coefficient()) if not p1.is_zero() else Fraction(0)
        return GoldenNumber(a, b)

    # specialization ---------------------------------------------------------
    def specialize(self, kappa=None, omega=None) -> "ParamScalar":
        """Substitute rational values for some of kappa, omega."""
        sub = {}
        if kappa is not None:
            sub["k"] = _fmpq(kappa)
        if omega is not None:
            sub["w"] = _fmpq(omega)
        if not sub:
            return self
        den = self.den.subs(sub)
        if den.is_zero():
            raise DenominatorVanishes(kappa, omega)
        return ParamScalar(self.num.subs(sub), den)

    def eval(self, kappa, omega=1) -> GoldenNumber:
        return param_eval(self, kappa, omega)

    def __float__(self):
        raise TypeError("use numeric.float_eval or param_eval to evaluate a ParamScalar")

    # text -------------------------------------------------------------------
    def __str__(self):
        return fraction_str(self.num, self.den)

    def __repr__(self):
        return f"ParamScalar({str(self)!r})"

    @staticmethod
    def parse(text: str) -> "ParamScalar":
        num, den = parse_fraction(text)
        return ParamScalar(num, den)


def _fmpq(x):
    x = _frac(x)
    return flint.fmpq(x.numerator, x.denominator)


def param_eval(s: ParamScalar, kappa, omega=1) -> GoldenNumber:
    """Exact value of ``s`` at rational (kappa, omega)."""
    s = ParamScalar.coerce(s)
    v = s.specialize(kappa=kappa, omega=omega)
    g = v.to_golden()
    assert g is not None
    return g


def pochhammer(base, m: int) -> ParamScalar:
    """Rising factorial base (base+1) ... (base+m-1); empty product is 1."""
    if m < 0:
        raise ValueError("pochhammer order must be nonnegative")
    base = ParamScalar.coerce(base)
    num, den = R.ONE, R.ONE
    for i in range(m):
        num = num * (base.num + R.const(i) * base.den)
        den = den * base.den
    return ParamScalar(num, den)


KAPPA = ParamScalar(R.K, R.ONE, _canonical=True)
OMEGA = ParamScalar(R.W, R.ONE, _canonical=True)
ONE = ParamScalar.coerce(1)
ZERO = ParamScalar.coerce(0)
TAU_S = ParamScalar.coerce(TAU)


def as_scalar(x) -> ParamScalar:
    return ParamScalar.coerce(x)


def parse_scalar(text: str) -> ParamScalar:
    return ParamScalar.parse(text)


__all__ = [
    "DenominatorVanishes",
    "GoldenNumber",
    "KAPPA",
    "OMEGA",
    "ONE",
    "ParamScalar",
    "ParseError",
    "Rational",
    "TAU",
    "TAU_INV",
    "TAU_S",
    "ZERO",
    "as_scalar",
    "golden_mul",
    "param_eval",
    "parse_scalar",
    "pochhammer",
]
