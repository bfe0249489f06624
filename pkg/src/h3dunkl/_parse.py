"""Small arithmetic-expression reader shared by ParamScalar and MultiPoly.

Grammar: integers, the names tau, k (kappa), w (omega), x1..x3, y1..y3,
binary + - * /, unary -, and ** or ^ with an integer exponent.  Everything
else is rejected.  Values are evaluated to canonical (num, den) pairs.
"""

from __future__ import annotations

import ast

from . import _ring as R

NAMES = {
    "tau": R.T,
    "k": R.K,
    "kappa": R.K,
    "w": R.W,
    "omega": R.W,
    "x1": R.X[0],
    "x2": R.X[1],
    "x3": R.X[2],
    "y1": R.Y[0],
    "y2": R.Y[1],
    "y3": R.Y[2],
}


class ParseError(ValueError):
    pass


def parse_fraction(text: str):
    src = text.replace("^", "**").strip()
    if not src:
        raise ParseError("empty expression")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None
    return _eval(tree.body)


def _eval(node):
    if isinstance(node, ast.Constant):
        if isinstance(node.value, bool) or not isinstance(node.value, int):
            raise ParseError(f"only integer literals are allowed, got {node.value!r}")
        return R.const(node.value), R.ONE
    if isinstance(node, ast.Name):
        if node.id not in NAMES:
            raise ParseError(f"unknown name {node.id!r}")
        return NAMES[node.id], R.ONE
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        n, d = _eval(node.operand)
        return (-n, d) if isinstance(node.op, ast.USub) else (n, d)
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            sign = 1
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                sign, exp = -1, exp.operand
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                raise ParseError("exponents must be integer literals")
            n, d = _eval(node.left)
            e = exp.value
            if sign < 0:
                n, d = d, n
            return R.normalize_fraction(n**e, d**e)
        a, b = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return R.normalize_fraction(a[0] * b[1] + b[0] * a[1], a[1] * b[1])
        if isinstance(node.op, ast.Sub):
            return R.normalize_fraction(a[0] * b[1] - b[0] * a[1], a[1] * b[1])
        if isinstance(node.op, ast.Mult):
            return R.normalize_fraction(a[0] * b[0], a[1] * b[1])
        if isinstance(node.op, ast.Div):
            if b[0].is_zero():
                raise ParseError("division by zero")
            return R.normalize_fraction(a[0] * b[1], a[1] * b[0])
    raise ParseError(f"unsupported syntax: {ast.dump(node)}")


_PRINT_NAMES = ("tau", "k", "w", "x1", "x2", "x3", "y1", "y2", "y3")


def _monomial_str(exps) -> str:
    parts = []
    for i, e in enumerate(exps):
        if i == R.IT or e == 0:
            continue
        name = _PRINT_NAMES[i]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _golden_str(a, b) -> str:
    from fractions import Fraction

    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return str(a)
    bt = "tau" if b == 1 else ("-tau" if b == -1 else f"{b}*tau")
    if a == 0:
        return bt
    if b < 0:
        return f"{a} - {str(-b) + '*tau' if b != -1 else 'tau'}"
    return f"{a} + {bt}"


def poly_str(p) -> str:
    """Render a tau-reduced polynomial, grouping the golden coefficient of each monomial."""
    if p.is_zero():
        return "0"
    groups: dict = {}
    for exps, c in p.to_dict().items():
        key = list(exps)
        tpow = key[R.IT]
        key[R.IT] = 0
        key = tuple(key)
        ab = groups.setdefault(key, [0, 0])
        ab[tpow] = R.to_fraction(c)
    keys = sorted(groups, key=lambda e: (-sum(e), tuple(-v for v in e)))
    out = []
    for key in keys:
        a, b = groups[key]
        mono = _monomial_str(key)
        coeff = _golden_str(a, b)
        negative = False
        if b == 0 and a < 0:
            negative, coeff = True, _golden_str(-a, 0)
        elif a == 0 and b < 0:
            negative, coeff = True, _golden_str(0, -b)
        if mono:
            if coeff == "1":
                term = mono
            elif " " in coeff:
                term = f"({coeff})*{mono}"
            else:
                term = f"{coeff}*{mono}"
        else:
            term = f"({coeff})" if (" " in coeff and len(keys) > 1) else coeff
        if not out:
            out.append(("-" if negative else "") + term)
        else:
            out.append((" - " if negative else " + ") + term)
    return "".join(out)


def fraction_str(num, den) -> str:
    if den.is_one():
        return poly_str(num)
    return f"({poly_str(num)})/({poly_str(den)})"
