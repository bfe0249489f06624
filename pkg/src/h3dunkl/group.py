"""The H3 root system, the icosahedral reflection group and its vertex sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .scalars import GoldenNumber, TAU, TAU_INV

G0 = GoldenNumber(0)
G1 = GoldenNumber(1)
G2 = GoldenNumber(2)

Vector = tuple  # tuple of three GoldenNumber
Matrix = tuple  # row-major 3x3 tuple of tuples of GoldenNumber


class ClosureOverflow(RuntimeError):
    """Closure under multiplication produced more elements than expected."""


def vec(*cs) -> Vector:
    return tuple(GoldenNumber.coerce(c) for c in cs)


def dot(u: Sequence, v: Sequence) -> GoldenNumber:
    out = G0
    for a, b in zip(u, v):
        out = out + GoldenNumber.coerce(a) * GoldenNumber.coerce(b)
    return out


def neg(u: Vector) -> Vector:
    return tuple(-c for c in u)


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(3)), G0) for j in range(3)) for i in range(3)
    )


def row_times(x: Vector, M: Matrix) -> Vector:
    """Row vector times matrix, the right action x -> xM."""
    return tuple(sum((x[i] * M[i][j] for i in range(3)), G0) for j in range(3))


def transpose(M: Matrix) -> Matrix:
    return tuple(tuple(M[j][i] for j in range(3)) for i in range(3))


def det3(M: Matrix) -> GoldenNumber:
    a, b, c = M
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


# Fast path: entries of H3 matrices lie in (1/2)Z[tau]; store 2*entry as an
# integer pair (a, b) meaning a + b*tau.
def _to_int(M: Matrix) -> tuple:
    out = []
    for row in M:
        for c in row:
            a, b = 2 * c.a, 2 * c.b
            if a.denominator != 1 or b.denominator != 1:
                raise ValueError("matrix entry outside (1/2)Z[tau]")
            out.append((int(a), int(b)))
    return tuple(out)


def _from_int(M: tuple) -> Matrix:
    from fractions import Fraction

    return tuple(
        tuple(GoldenNumber(Fraction(a, 2), Fraction(b, 2)) for a, b in M[3 * i : 3 * i + 3])
        for i in range(3)
    )


def _int_mul(A: tuple, B: tuple) -> tuple:
    out = []
    for i in range(3):
        for j in range(3):
            sa = sb = 0
            for k in range(3):
                a1, b1 = A[3 * i + k]
                a2, b2 = B[3 * k + j]
                sa += a1 * a2 + b1 * b2
                sb += a1 * b2 + a2 * b1 + b1 * b2
            if sa % 2 or sb % 2:
                raise ValueError("product left (1/2)Z[tau]")
            out.append((sa // 2, sb // 2))
    return tuple(out)


_INT_ID = tuple((2, 0) if i == j else (0, 0) for i in range(3) for j in range(3))


def _int_order(M: tuple) -> int:
    order, P = 1, M
    while P != _INT_ID:
        P = _int_mul(P, M)
        order += 1
        if order > 60:
            raise ValueError("matrix has no finite small order")
    return order


IDENTITY: Matrix = tuple(tuple(G1 if i == j else G0 for j in range(3)) for i in range(3))


def _lex_key(M: Matrix):
    return tuple((c.a, c.b) for row in M for c in row)


@dataclass(frozen=True)
class GroupElement:
    """Orthogonal 3x3 matrix over Q(tau) with its class data."""

    matrix: Matrix
    det: int
    trace: GoldenNumber
    order: int
    class_tag: str

    @staticmethod
    def from_matrix(M: Matrix) -> "GroupElement":
        M = tuple(tuple(GoldenNumber.coerce(c) for c in row) for row in M)
        d = det3(M)
        if d not in (G1, -G1):
            raise ValueError("matrix is not orthogonal with determinant +-1")
        tr = M[0][0] + M[1][1] + M[2][2]
        order = _int_order(_to_int(M))
        det = 1 if d == G1 else -1
        return GroupElement(M, det, tr, order, _classify(det, order, tr))

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.from_matrix(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "GroupElement":
        return GroupElement.from_matrix(transpose(self.matrix))

    def act(self, x: Vector) -> Vector:
        """x -> x w (row vector convention)."""
        return row_times(x, self.matrix)

    def is_orthogonal(self) -> bool:
        return mat_mul(self.matrix, transpose(self.matrix)) == IDENTITY

    def sort_key(self):
        return (self.det, self.order, _trace_key(self.trace), _lex_key(self.matrix))

    def __str__(self):
        rows = "; ".join(", ".join(str(c) for c in row) for row in self.matrix)
        return f"[{rows}] ({self.class_tag})"


def _trace_key(g: GoldenNumber):
    return (float(g), g.a, g.b)


def _classify(det: int, order: int, tr: GoldenNumber) -> str:
    if order == 1:
        return "identity"
    if det == -1:
        # a reflection has eigenvalues (-1, 1, 1)
        return "reflection" if (order == 2 and tr == G1) else "improper"
    if order == 2:
        return "rho2"
    if order == 3:
        return "rho3"
    if order == 5:
        if tr == TAU:
            return "rho5_1"
        if tr == G1 - TAU:
            return "rho5_2"
    raise ValueError(f"rotation of order {order} and trace {tr} is not in H3")


def reflection_matrix(v: Vector) -> GroupElement:
    """Matrix of x -> x - 2<x,v>/|v|^2 v acting on row vectors."""
    v = vec(*v)
    n2 = dot(v, v)
    if not n2:
        raise ValueError("zero root")
    s = G2 / n2
    M = tuple(
        tuple((G1 if i == j else G0) - s * v[i] * v[j] for j in range(3)) for i in range(3)
    )
    return GroupElement.from_matrix(M)


@dataclass(frozen=True)
class RootSystemH3:
    """The 15 positive roots, each of squared length 4, and the chamber vector u0."""

    positive_roots: tuple = field(default_factory=lambda: POSITIVE_ROOTS)
    u0: Vector = field(default_factory=lambda: U0)

    @property
    def simple_roots(self) -> tuple:
        return SIMPLE_ROOTS

    def all_roots(self) -> tuple:
        return self.positive_roots + tuple(neg(v) for v in self.positive_roots)


t, ti = TAU, TAU_INV
U0: Vector = vec(3, 2 * t, 1)
POSITIVE_ROOTS: tuple = (
    vec(2, 0, 0),
    vec(0, 2, 0),
    vec(0, 0, 2),
    vec(t, ti, 1),
    vec(t, ti, -1),
    vec(t, -ti, 1),
    vec(t, -ti, -1),
    vec(1, t, ti),
    vec(1, t, -ti),
    vec(-1, t, ti),
    vec(-1, t, -ti),
    vec(ti, 1, t),
    vec(ti, -1, t),
    vec(-ti, 1, t),
    vec(ti, 1, -t),
)
SIMPLE_ROOTS: tuple = (vec(t, -ti, -1), vec(-1, t, -ti), vec(ti, -1, t))

ICOSAHEDRON: tuple = tuple(
    [vec(0, s1 * t, s2) for s1 in (1, -1) for s2 in (1, -1)]
    + [vec(s1, 0, s2 * t) for s1 in (1, -1) for s2 in (1, -1)]
    + [vec(s1 * t, s2, 0) for s1 in (1, -1) for s2 in (1, -1)]
)
DODECAHEDRON: tuple = tuple(
    [vec(0, s1 * ti, s2 * t) for s1 in (1, -1) for s2 in (1, -1)]
    + [vec(s1 * t, 0, s2 * ti) for s1 in (1, -1) for s2 in (1, -1)]
    + [vec(s1 * ti, s2 * t, 0) for s1 in (1, -1) for s2 in (1, -1)]
    + [vec(a, b, c) for a in (1, -1) for b in (1, -1) for c in (1, -1)]
)


def _positive_half(points) -> tuple:
    return tuple(p for p in points if dot(p, U0) > 0)


@dataclass(frozen=True)
class VertexSets:
    I: tuple = ICOSAHEDRON
    I_plus: tuple = field(default_factory=lambda: _positive_half(ICOSAHEDRON))
    K: tuple = DODECAHEDRON
    K_plus: tuple = field(default_factory=lambda: _positive_half(DODECAHEDRON))


VERTICES = VertexSets()
Y0: Vector = vec(0, t, 1)
Y1: Vector = vec(t, 1, 0)


def generate_group(R: RootSystemH3 | None = None, limit: int = 120) -> list:
    """Closure of the reflections of R under multiplication, sorted deterministically."""
    R = R or RootSystemH3()
    gens = [_to_int(reflection_matrix(v).matrix) for v in R.positive_roots]
    seen = {_INT_ID}
    frontier = [_INT_ID]
    while frontier:
        nxt = []
        for M in frontier:
            for S in gens:
                P = _int_mul(M, S)
                if P not in seen:
                    seen.add(P)
                    nxt.append(P)
                    if len(seen) > limit:
                        raise ClosureOverflow(f"closure exceeded {limit} elements")
        frontier = nxt
    elems = [GroupElement.from_matrix(_from_int(M)) for M in seen]
    elems.sort(key=GroupElement.sort_key)
    return elems


class H3Group:
    """Indexed view of the 120 elements with a multiplication table.

    Products are taken as matrices, so ``mul(i, j)`` is the index of
    ``elements[i].matrix @ elements[j].matrix``.
    """

    def __init__(self, R: RootSystemH3 | None = None):
        self.roots = R or RootSystemH3()
        self.elements = generate_group(self.roots)
        self.index = {g.matrix: i for i, g in enumerate(self.elements)}
        self._ints = [_to_int(g.matrix) for g in self.elements]
        self._int_index = {m: i for i, m in enumerate(self._ints)}
        self.identity = self.index[IDENTITY]
        self.reflection_index = tuple(
            self.index[reflection_matrix(v).matrix] for v in self.roots.positive_roots
        )
        self._table: dict = {}

    def __len__(self):
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        r = self._table.get(key)
        if r is None:
            r = self._int_index[_int_mul(self._ints[i], self._ints[j])]
            self._table[key] = r
        return r

    @cached_property
    def inverse(self) -> tuple:
        return tuple(self.index[transpose(g.matrix)] for g in self.elements)

    def class_members(self, tag: str) -> list:
        return [i for i, g in enumerate(self.elements) if g.class_tag == tag]

    def census(self) -> dict:
        counts: dict = {}
        for g in self.elements:
            counts[g.class_tag] = counts.get(g.class_tag, 0) + 1
        return {
            "order": len(self.elements),
            "reflections": counts.get("reflection", 0),
            "rotations": sum(1 for g in self.elements if g.det == 1 and g.order > 1),
            "improper": counts.get("improper", 0),
            "classes": {k: counts.get(k, 0) for k in CLASS_TAGS},
        }


CLASS_TAGS = ("identity", "reflection", "rho2", "rho3", "rho5_1", "rho5_2", "improper")

_GROUP: H3Group | None = None


def h3_group() -> H3Group:
    """Shared, lazily built group instance."""
    global _GROUP
    if _GROUP is None:
        _GROUP = H3Group()
    return _GROUP


def stabilizer_census(y: Vector, R: RootSystemH3 | None = None):
    """(number of reflections fixing y, number moving y) plus the set of images."""
    R = R or RootSystemH3()
    y = vec(*y)
    fixing, images = 0, []
    for v in R.positive_roots:
        img = reflection_matrix(v).act(y)
        if img == y:
            fixing += 1
        else:
            images.append(img)
    return fixing, len(images), images


__all__ = [
    "CLASS_TAGS",
    "ClosureOverflow",
    "DODECAHEDRON",
    "GroupElement",
    "H3Group",
    "ICOSAHEDRON",
    "POSITIVE_ROOTS",
    "RootSystemH3",
    "SIMPLE_ROOTS",
    "U0",
    "VERTICES",
    "VertexSets",
    "Y0",
    "Y1",
    "dot",
    "generate_group",
    "h3_group",
    "mat_mul",
    "reflection_matrix",
    "row_times",
    "stabilizer_census",
    "vec",
]
