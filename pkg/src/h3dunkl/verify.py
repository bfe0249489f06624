"""Verification suites and their reports.

Each suite is a list of named checks.  A check returns ``True``/``False`` or a
``Outcome``; on failure the outcome carries both sides rendered as text so the
CLI can print them.  Every check id maps to one anchor string naming the
identity it exercises.
"""

from __future__ import annotations

import itertools
import json
from math import factorial
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import dunkl as dk
from . import kernel as kn
from . import waves as wv
from .config import VerifyConfig
from .group import Y0, Y1, dot, h3_group, stabilizer_census, vec
from .polyalg import MultiPoly
from .scalars import KAPPA, OMEGA, TAU, GoldenNumber, ParamScalar, param_eval, pochhammer

k, w = KAPPA, OMEGA
E = dk.E_BASIS


@dataclass
class Outcome:
    passed: bool
    witness: dict | None = None


@dataclass
class CheckResult:
    id: str
    anchor: str
    status: str  # "pass" | "fail" | "skipped-slow" | "error"
    elapsed: float
    witness: dict | None = None


@dataclass
class VerifyReport:
    suite: str
    results: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status in ("pass", "skipped-slow") for r in self.results)

    @property
    def failures(self) -> list:
        return [r for r in self.results if r.status in ("fail", "error")]

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "results": [asdict(r) for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2, default=str)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            lines.append(f"  [{r.status:>12}] {r.id}  ({r.anchor}; {r.elapsed:.2f}s)")
            if r.witness and r.status != "pass":
                for key, val in r.witness.items():
                    lines.append(f"      {key}: {val}")
            elif r.witness and r.witness.get("note"):
                lines.append(f"      note: {r.witness['note']}")
        return "\n".join(lines)


def compare(lhs, rhs) -> Outcome:
    if lhs == rhs:
        return Outcome(True)
    return Outcome(False, {"lhs": str(lhs), "rhs": str(rhs)})


def all_of(outcomes) -> Outcome:
    for o in outcomes:
        if isinstance(o, bool):
            o = Outcome(o)
        if not o.passed:
            return o
    return Outcome(True)


@dataclass
class Check:
    id: str
    anchor: str
    fn: Callable[[], object]
    slow: bool = False


def run_checks(suite: str, checks: list, slow: bool = False) -> VerifyReport:
    report = VerifyReport(suite)
    for c in checks:
        if c.slow and not slow:
            report.results.append(CheckResult(c.id, c.anchor, "skipped-slow", 0.0))
            continue
        t0 = time.perf_counter()
        try:
            out = c.fn()
            if isinstance(out, bool):
                out = Outcome(out)
            status = "pass" if out.passed else "fail"
            witness = out.witness
        except Exception as exc:  # reported, never swallowed silently
            status, witness = "error", {"exception": f"{type(exc).__name__}: {exc}"}
        report.results.append(
            CheckResult(c.id, c.anchor, status, time.perf_counter() - t0, witness)
        )
    return report


# ---------------------------------------------------------------------------
# random inputs


def random_golden(rng: random.Random, lo: int = -3, hi: int = 3) -> GoldenNumber:
    return GoldenNumber(Fraction(rng.randint(lo, hi)), Fraction(rng.randint(lo, hi)))


def monomials(degree: int, arity: int = 3) -> list:
    return [e for e in itertools.product(range(degree + 1), repeat=arity) if sum(e) == degree]


def random_poly(rng: random.Random, degree: int, homogeneous: bool = False, terms: int = 4) -> MultiPoly:
    """Sparse random polynomial with small golden coefficients."""
    pool = monomials(degree) if homogeneous else [m for d in range(degree + 1) for m in monomials(d)]
    chosen = rng.sample(pool, min(terms, len(pool)))
    out = MultiPoly.from_terms({e: random_golden(rng) for e in chosen})
    if out.is_zero():
        out = MultiPoly.from_terms({chosen[0]: 1})
    return out


def basis_up_to(degree: int) -> list:
    return [MultiPoly.from_terms({e: 1}) for d in range(degree + 1) for e in monomials(d)]


# ---------------------------------------------------------------------------
# group


def suite_group(cfg: VerifyConfig) -> list:
    def census():
        t0 = time.perf_counter()
        c = h3_group().census()
        t = time.perf_counter() - t0
        want = {"order": 120, "reflections": 15, "rotations": 59, "improper": 45}
        got = {key: c[key] for key in want}
        return Outcome(got == want, {"census": got, "build_seconds": round(t, 3)})

    def classes():
        g = h3_group()
        got = {tag: len(g.class_members(tag)) for tag in ("rho2", "rho3", "rho5_1", "rho5_2")}
        return Outcome(got == {"rho2": 15, "rho3": 20, "rho5_1": 12, "rho5_2": 12}, {"classes": got})

    def closure():
        g = h3_group()
        n = len(g)
        rng = random.Random(cfg.seed)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(400)]
        return all(0 <= g.mul(i, j) < n for i, j in pairs) and all(
            g.mul(i, g.inverse[i]) == g.identity for i in range(n)
        )

    def stabilizers():
        return all(stabilizer_census(y)[:2] == (5, 10) for y in (Y0, Y1))

    return [
        Check("group.census", "group order and element types", census),
        Check("group.classes", "rotation class sizes", classes),
        Check("group.closure", "multiplication table closure", closure),
        Check("group.vertex_stabilizer", "reflections fixing an icosahedron vertex", stabilizers),
    ]


# ---------------------------------------------------------------------------
# Dunkl operators


def suite_dunkl(cfg: VerifyConfig) -> list:
    ctx = dk.default_context()
    x1, x2, x3 = (MultiPoly.var(i) for i in range(3))

    def d1x1cubed():
        lhs = dk.dunkl_i(ctx, x1**3, 0)
        rhs = (
            x1**2 * (3 + Fraction(23, 2) * k)
            + x2**2 * (k * (Fraction(7, 2) - TAU / 2))
            + x3**2 * (k * (3 + TAU / 2))
        )
        return compare(lhs, rhs)

    def commute():
        outs = []
        for p in basis_up_to(6):
            for i, j in ((0, 1), (0, 2), (1, 2)):
                a = dk.dunkl_i(ctx, dk.dunkl_i(ctx, p, j), i)
                b = dk.dunkl_i(ctx, dk.dunkl_i(ctx, p, i), j)
                outs.append(compare(a, b))
        return all_of(outs)

    def laplacian_forms():
        rng = random.Random(cfg.seed)
        return all_of(
            compare(dk.dunkl_laplacian(ctx, p), dk.dunkl_laplacian_by_squares(ctx, p))
            for p in (random_poly(rng, d) for d in range(1, 6))
        )

    return [
        Check("dunkl.D1_x1_cubed", "first Dunkl operator on x1^3", d1x1cubed),
        Check("dunkl.commute", "Dunkl operators commute on P<=6", commute),
        Check("dunkl.laplacian_closed_form", "Laplacian as sum of squares", laplacian_forms),
    ]


# ---------------------------------------------------------------------------
# operator identities


def suite_operators(cfg: VerifyConfig) -> list:
    ctx = dk.default_context()
    basis = basis_up_to(cfg.max_degree_ops)
    r2 = MultiPoly.norm_sq()
    rng = random.Random(cfg.seed)
    dirs = [E[0], E[1], E[2], vec(1, TAU, 0), vec(0, 1, TAU + 1)]

    def dunkl_linear():
        outs = []
        for a, b in itertools.product(dirs[:3] + dirs[3:4], repeat=2):
            lb = MultiPoly.linear_form(b)
            for p in basis:
                lhs = dk.dunkl(ctx, lb * p, a) - lb * dk.dunkl(ctx, p, a)
                refl = MultiPoly.const(0)
                for idx, rd in enumerate(ctx.root_data):
                    c = dot(a, rd.v) * dot(b, rd.v)
                    if c:
                        refl = refl + dk.reflect(ctx, p, idx) * (c / 4)
                rhs = p * dot(a, b) + refl * (2 * k)
                outs.append(compare(lhs, rhs))
        return all_of(outs)

    def lap_r2():
        outs = []
        for p in basis:
            lhs = dk.dunkl_laplacian(ctx, r2 * p) - r2 * dk.dunkl_laplacian(ctx, p)
            rhs = (p * (3 + 2 * ctx.gamma) + dk.euler(p) * 2) * 2
            outs.append(compare(lhs, rhs))
        return all_of(outs)

    def lap_linear():
        outs = []
        for b in dirs:
            lb = MultiPoly.linear_form(b)
            for p in basis:
                lhs = dk.dunkl_laplacian(ctx, lb * p) - lb * dk.dunkl_laplacian(ctx, p)
                outs.append(compare(lhs, dk.dunkl(ctx, p, b) * 2))
                lhs2 = r2 * dk.dunkl(ctx, p, b) - dk.dunkl(ctx, r2 * p, b)
                outs.append(compare(lhs2, lb * p * (-2)))
        return all_of(outs)

    def angular_square():
        return all_of(
            compare(dk.angular_J_square(ctx, p, "definition"), dk.angular_J_square(ctx, p, "closed"))
            for p in basis
        )

    def j_commutators():
        outs = []
        for (a, b) in ((E[0], E[1]), (E[1], E[2]), (dirs[3], dirs[4])):
            for p in basis:
                j = dk.angular_J(ctx, a, b, p)
                outs.append(compare(j, dk.angular_J_swapped(ctx, a, b, p)))
                outs.append(
                    compare(
                        dk.dunkl_laplacian(ctx, j),
                        dk.angular_J(ctx, a, b, dk.dunkl_laplacian(ctx, p)),
                    )
                )
                outs.append(compare(r2 * j, dk.angular_J(ctx, a, b, r2 * p)))
        return all_of(outs)

    def h_commutes_with_ha():
        outs = []
        for a in dirs + [Y0]:
            for p in basis:
                lhs = dk.hamiltonian_tilde(ctx, dk.H_a_tilde(ctx, a, p))
                rhs = dk.H_a_tilde(ctx, a, dk.hamiltonian_tilde(ctx, p))
                outs.append(compare(lhs, rhs))
        return all_of(outs)

    def h1():
        return all_of(
            compare(dk.H_k_tilde(ctx, 1, p), dk.hamiltonian_tilde(ctx, p) * (2 * (TAU + 2)))
            for p in basis
        )

    def ladder():
        outs = []
        for a in dirs[:3]:
            for n in range(1, 4):
                p = random_poly(rng, n, homogeneous=True)
                wav = dk.heat_exp(ctx, p, -1)
                ev = ctx.E(n)
                outs.append(compare(dk.hamiltonian_tilde(ctx, wav), wav * ev))
                up = dk.raise_lower(ctx, a, -1, wav)
                outs.append(compare(dk.hamiltonian_tilde(ctx, up), up * (ev + 2 * w)))
                down = dk.raise_lower(ctx, a, 1, wav)
                outs.append(compare(dk.hamiltonian_tilde(ctx, down), down * (ev - 2 * w)))
        return all_of(outs)

    def h_commutes_with_J():
        return all_of(
            compare(
                dk.hamiltonian_tilde(ctx, dk.angular_J_square(ctx, p)),
                dk.angular_J_square(ctx, dk.hamiltonian_tilde(ctx, p)),
            )
            for p in basis
        )

    return [
        Check("ops.dunkl_linear_commutator", "commutator of Dunkl operator with linear form", dunkl_linear),
        Check("ops.lap_xsq", "commutator of Laplacian with |x|^2", lap_r2),
        Check("ops.lap_linear", "Laplacian and |x|^2 against linear terms", lap_linear),
        Check("ops.angular_square", "angular momentum square closed form", angular_square),
        Check("ops.J_commutators", "J_ab symmetry and commutation with Laplacian, |x|^2", j_commutators),
        Check("ops.H_Ha", "Hamiltonian commutes with H_a", h_commutes_with_ha),
        Check("ops.H1", "H^(1) equals 2(tau+2) times the Hamiltonian", h1),
        Check("ops.ladder", "raising and lowering shift the energy by 2 omega", ladder),
        Check("ops.H_J", "Hamiltonian commutes with angular momentum square", h_commutes_with_J),
    ]


# ---------------------------------------------------------------------------
# generating function


def suite_genfun(cfg: VerifyConfig) -> list:
    ctx = dk.default_context()
    fam = wv.family(Y0)
    nmax = cfg.max_degree_waves
    rng = random.Random(cfg.seed)

    def q2_value():
        x2, x3 = MultiPoly.var(1), MultiPoly.var(2)
        generated = (x2 * TAU + x3) ** 2 + MultiPoly.norm_sq() * (2 * k * (TAU + 2))
        kappa_free = (x2 * TAU + x3) ** 2 + MultiPoly.norm_sq() * (2 * (TAU + 2))
        out = compare(fam.q(2), generated)
        out.witness = {
            **(out.witness or {}),
            "note": "q_2 carries 2 kappa (tau+2)|x|^2; the kappa-free form is not q_2"
            if fam.q(2) != kappa_free
            else "the kappa-free form also matches"
        }
        return out

    def gf_consistency():
        order = min(10, nmax)
        series = wv.generating_series(Y0, order)
        return all_of(compare(series[n], fam.q(n)) for n in range(order + 1))

    def q3_derivative():
        outs = []
        for u in (E[0], E[1], E[2], vec(1, 2, 3)):
            lhs = dk.dunkl(ctx, fam.q(3), u)
            rhs = fam.q(2) * ((TAU * vec(*u)[1] + vec(*u)[2]) * (10 * k + 3))
            outs.append(compare(lhs, rhs))
        return all_of(outs)

    def derivative_rule():
        outs = []
        for n in range(1, nmax // 2 + 1):
            for u in (E[0], E[1], E[2]):
                r = wv.verify_q_derivative(fam, n, u)
                outs.extend(r.values())
        return all(outs)

    def orthogonal_direction():
        u = vec(1, 0, 0)  # <u, y0> = 0 for y0 = (0, tau, 1)
        return all(dk.dunkl(ctx, fam.q(n), u).is_zero() for n in range(1, nmax + 1))

    def laplacian_lowers():
        return all(wv.verify_laplacian_q(fam, n) for n in range(nmax + 1))

    def parity():
        neg = wv.QFamily(tuple(-c for c in Y0), fam.cap)
        return all_of(compare(neg.q(n), fam.q(n) * (-1) ** n) for n in range(min(10, nmax) + 1))

    def reproducing():
        outs = []
        for n in range(1, nmax + 1):
            qn = fam.q(n)
            for _ in range(cfg.random_polys_per_degree):
                p = random_poly(rng, n, homogeneous=True, terms=3)
                lhs = dk.pairing_kw(ctx, p, qn)
                rhs = wv.nu(n) / (2 * w) ** n * p.evaluate(list(Y0))
                outs.append(compare(lhs, rhs))
        return all_of(outs)

    def nu_ratios():
        outs = []
        for n in range(1, 17):
            outs.append(compare(wv.nu(n) / wv.nu(n - 1), (10 * k + n) if n % 2 else (12 * k + n)))
            for m in range(n // 2 + 1):
                outs.append(compare(wv.nu_ratio(n, m), wv.nu_ratio_closed(n, m)))
        return all_of(outs)

    return [
        Check("genfun.q2", "q_2 from the generating function", q2_value),
        Check("genfun.series", "q_n are the coefficients of F", gf_consistency),
        Check("genfun.q3_derivative", "directional derivative of q_3", q3_derivative),
        Check("genfun.derivative_rule", "derivative rule, both parities", derivative_rule),
        Check("genfun.orthogonal", "derivative along a direction orthogonal to y0", orthogonal_direction),
        Check("genfun.laplacian_lowers", "Laplacian lowers q_n by two", laplacian_lowers),
        Check("genfun.parity", "q_n(x; -y0) = (-1)^n q_n(x; y0)", parity),
        Check("genfun.reproducing", "reproducing property of q_n", reproducing),
        Check("genfun.nu", "nu ratios", nu_ratios),
    ]


# ---------------------------------------------------------------------------
# harmonicity and norms


def suite_norms(cfg: VerifyConfig) -> list:
    ctx = dk.default_context()
    f0, f1 = wv.family(Y0), wv.family(Y1)
    nmax = cfg.max_degree_waves
    closed = wv.closed_form_invariant_norms()

    def harmonic():
        return all(dk.dunkl_laplacian(ctx, f0.phi(n)).is_zero() for n in range(nmax + 1))

    def top_terms():
        return all_of(
            [compare(f0.w(n).homogeneous_component(n, x_only=True), f0.q(n)) for n in range(9)]
            + [compare(dk.harmonic_project(ctx, f0.q(n)), f0.phi(n)) for n in range(9)]
        )

    def w_is_heat():
        return all_of(compare(dk.heat_exp(ctx, f0.q(n), -1), f0.w(n)) for n in range(9))

    def w_cross_pairing():
        outs = []
        for n in range(1, 9):
            for g in (f0, f1):
                lhs = dk.pairing_L2(ctx, f0.w(n), g.w(n))
                rhs = wv.nu(n) / (2 * w) ** n * g.q(n).evaluate(list(f0.y0))
                outs.append(compare(lhs, rhs))
        return all_of(outs)

    def w_norm():
        outs = []
        for n in range(1, 9):
            h = n // 2
            lhs = dk.pairing_L2(ctx, f0.w(n), f0.w(n))
            base = wv.nu(n) / (2 * w) ** n * TAU ** (2 * h) * wv.Y0_seq(h)
            outs.append(compare(lhs, base if n % 2 == 0 else base * (TAU + 2)))
        return all_of(outs)

    def w_adjacent_pairing():
        outs = []
        for n in range(1, 9):
            h = n // 2
            lhs = dk.pairing_L2(ctx, f0.w(n), f1.w(n))
            # odd degrees carry (2 omega)^(-n) with n = 2h+1
            outs.append(compare(lhs, wv.nu(n) / (2 * w) ** n * TAU**n * wv.Y1_seq(h)))
        return all_of(outs)

    def wG_norm():
        outs = []
        for n2 in (2, 4, 6):
            wg = wv.invariant_w(n2)
            lhs = dk.pairing_L2(ctx, wg, wg)
            h = n2 // 2
            rhs = 6 * wv.nu(n2) / (2 * w) ** n2 * TAU**n2 * (wv.Y0_seq(h) + 5 * wv.Y1_seq(h))
            outs.append(compare(lhs, rhs))
        outs.extend(compare(wv.Y2_seq(n), wv.Y0_seq(n) + 5 * wv.Y1_seq(n)) for n in range(9))
        return all_of(outs)

    def vertex_values():
        return all_of(
            compare(wv.q_at_vertex(n, case), wv.q_at_vertex_direct(n, case, f0))
            for n in range(nmax + 1)
            for case in ("same", "tau")
        )

    def phi_inner():
        outs = []
        for n in range(1, 8):
            lhs = dk.pairing_L2(ctx, f0.phi(n), f1.phi(n))
            total = ParamScalar.coerce(0)
            for j in range(n // 2 + 1):
                total = total + (
                    (TAU + 2) ** (2 * j)
                    / (4**j * factorial(j) * pochhammer(-15 * k - n + Fraction(1, 2), j))
                    * wv.nu(n) ** 2
                    / wv.nu(n - 2 * j)
                    * f0.q(n - 2 * j).evaluate(list(Y1))
                )
            outs.append(compare(lhs, total / (2 * w) ** n))
        return all_of(outs)

    def invariance():
        g = h3_group()
        outs = []
        for n2 in (2, 4, 6):
            for poly in (wv.invariant_q(n2), wv.invariant_w(n2), wv.invariant_phi(n2)):
                for ridx in g.reflection_index:
                    outs.append(compare(poly.substitute(g.elements[ridx]), poly))
        return all_of(outs)

    def vanishing():
        return all(wv.invariant_phi(n2).is_zero() for n2 in wv.VANISHING_INVARIANT_DEGREES)

    def dimensions():
        outs = []
        for n2 in range(2, min(nmax, 16) + 1, 2):
            nonzero = not wv.invariant_phi(n2).is_zero()
            outs.append(nonzero == (wv.harmonic_invariant_dimension(n2) > 0))
        return all(outs)

    def closed_norm(n2):
        def check():
            phi = wv.invariant_phi(n2)
            direct = dk.pairing_L2(ctx, phi, phi)
            return all_of(
                [
                    compare(direct, closed[n2]),
                    compare(wv.norm_invariant_phi(n2 // 2), closed[n2]),
                    compare(wv.norm_invariant_phi_vertex(n2 // 2), closed[n2]),
                ]
            )

        return check

    def closed_vanish():
        return all(wv.norm_invariant_phi(n).is_zero() for n in (1, 2, 4, 7))

    def power_sums():
        r2 = MultiPoly.norm_sq()
        outs = [compare(wv.power_sum(m), wv.power_sum_closed(m)) for m in range(1, 7)]
        outs.append(compare(wv.power_sum(1), r2 * (2 * (TAU + 2))))
        # the coefficient of |x|^4 is 6(tau+1): at x = e1 the sum is 2 + 2 tau^4
        s4 = wv.power_sum(2)
        outs.append(compare(s4, r2**2 * (6 * (TAU + 1))))
        outs.append(
            compare(wv.power_sum(3), r2**3 * (4 * (4 * TAU + 3)) + wv.icosa_product() * (6 * (2 * TAU - 1)))
        )
        outs.append(
            compare(
                wv.power_sum(5),
                # with K_+ cut out by u0 the dodecahedral product enters with a minus sign
                wv.dodeca_product() * (-5 * (5 * TAU + 3))
                + r2**2 * wv.icosa_product() * (75 * (3 * TAU + 1))
                + r2**5 * (10 * (11 * TAU + 7)),
            )
        )
        out = all_of(outs)
        if out.passed and s4 != r2**2 * (6 * (TAU + 2)):
            out.witness = {
                "note": "s_4 = 6(tau+1)|x|^4, not 6(tau+2)|x|^4; in s_10 the product over "
                "K_+ has coefficient -5(5 tau + 3)"
            }
        return out

    def wtophi():
        return all_of(compare(wv.wtophi_sum(f0, n), f0.w(n)) for n in range(1, 9))

    def w3_two_term():
        r = wv.w3_two_term_forms(f0)
        note = (
            "w_3 needs the factor L_1^(15k+3/2)(omega|x|^2) on phi_1"
            if r["with_laguerre_factor"] and not r["two_term"]
            else ""
        )
        return Outcome(r["with_laguerre_factor"], {"note": note, **r})

    def laguerre_waves():
        outs = []
        for n, m in ((1, 1), (2, 1), (3, 1), (2, 2)):
            f, nrm = wv.laguerre_wave(n, m, "vertex", f0)
            outs.append(compare(dk.hamiltonian_tilde(ctx, f), f * ctx.E(n + 2 * m)))
            outs.append(compare(dk.pairing_L2(ctx, f, f), nrm))
        f, nrm = wv.laguerre_wave(6, 2, "invariant", f0)
        outs.append(compare(dk.hamiltonian_tilde(ctx, f), f * ctx.E(10)))
        outs.append(compare(nrm, closed[6] * pochhammer(15 * k + 6 + Fraction(3, 2), 2) / 2))
        outs.append(compare(dk.pairing_L2(ctx, f, f), nrm))
        return all_of(outs)

    return [
        Check("norms.harmonic", "phi_n is kappa-harmonic", harmonic),
        Check("norms.top_terms", "w_n has top part q_n and phi_n is the harmonic projection of q_n", top_terms),
        Check("norms.w_heat", "w_n = exp(-Delta/4 omega) q_n", w_is_heat),
        Check("norms.w_cross_pairing", "inner product of w_n at two vertices", w_cross_pairing),
        Check("norms.w_norm", "squared norm of w_n", w_norm),
        Check("norms.w_adjacent_pairing", "w_n inner product at adjacent vertices", w_adjacent_pairing),
        Check("norms.wG_norm", "squared norm of invariant w", wG_norm),
        Check("norms.vertex_values", "q_n at vertex pairs", vertex_values),
        Check("norms.phi_inner", "phi_n inner product at two vertices", phi_inner),
        Check("norms.invariance", "orbit sums are G-invariant", invariance),
        Check("norms.phiG_vanish", "phi^G vanishes in degrees 2, 4, 8, 14", vanishing),
        Check("norms.phiG_dimension", "phi^G nonzero iff an invariant harmonic exists", dimensions),
        Check("norms.phiG_6", "squared norm of phi^G_6", closed_norm(6)),
        Check("norms.phiG_10", "squared norm of phi^G_10", closed_norm(10)),
        Check("norms.phiG_12", "squared norm of phi^G_12", closed_norm(12)),
        Check("norms.phiG_16", "squared norm of phi^G_16", closed_norm(16)),
        Check("norms.phiG_sum_vanish", "closed-form norm sum vanishes", closed_vanish),
        Check("norms.power_sums", "power sums over I_+", power_sums),
        Check("norms.wtophi", "w_n as a Laguerre sum of phi", wtophi),
        Check("norms.w3_two_term", "two-term form of w_3", w3_two_term),
        Check("norms.laguerre_waves", "Laguerre waves: energy and norm", laguerre_waves),
    ]


# ---------------------------------------------------------------------------
# moments oracle


def suite_moments(cfg: VerifyConfig) -> list:
    ctx = dk.default_context()

    def oracle(kappa0):
        def check():
            rng = random.Random(cfg.seed + kappa0)
            outs = []
            for _ in range(20):
                p = random_poly(rng, rng.randint(0, 4), terms=3)
                q = random_poly(rng, rng.randint(0, 4), terms=3)
                lhs = dk.pairing_L2(ctx, p, q).specialize(kappa=kappa0)
                rhs = dk.pairing_L2_moments(ctx, p, q, kappa0)
                outs.append(compare(lhs, rhs))
            return all_of(outs)

        return check

    return [
        Check("moments.kappa0", "E-operator pairing vs Gaussian moments, kappa = 0", oracle(0)),
        Check("moments.kappa1", "E-operator pairing vs Gaussian moments, kappa = 1", oracle(1)),
    ]


# ---------------------------------------------------------------------------
# angular momentum square


def suite_jsquare(cfg: VerifyConfig) -> list:
    fam = wv.family(Y0)

    def target(name, ns):
        def check():
            return all_of(
                compare(r["lhs"], r["rhs"])
                for r in (wv.jsquare_eigencheck(name, n, fam) for n in ns)
            )

        return check

    def reflection_sums():
        return all(all(wv.reflection_sum_checks(fam, m).values()) for m in range(0, 5))

    return [
        Check("jsquare.phi_odd", "J on phi_{2n+1}", target("phi_odd", range(0, 5))),
        Check("jsquare.phi_G", "J on phi^G_{2n}", target("phi_G", (3, 5, 6))),
        Check("jsquare.phi_even", "J on phi_{2n}, mixed form", target("phi_even", range(1, 6))),
        Check("jsquare.combination", "J on phi_{2n} - phi^G_{2n}/6", target("combination", range(1, 6))),
        Check("jsquare.w_examples", "J on w_2, w_3, w_4", target("w", (2, 3, 4))),
        Check("jsquare.reflection_sums", "reflection sums on q and x.nabla on phi", reflection_sums),
    ]


# ---------------------------------------------------------------------------
# cubic operator


def suite_h3(cfg: VerifyConfig) -> list:
    fam = wv.family(Y0)

    def phi2_L2():
        r = wv.h3_phi2_eigen(fam)
        return Outcome(all(r.values()), r)

    def w2():
        return wv.h3_w2_closed_form(fam)

    def commutes():
        ctx = dk.default_context()
        rng = random.Random(cfg.seed)
        outs = []
        for d in (1, 2, 3):
            p = random_poly(rng, d, terms=3)
            outs.append(
                compare(
                    dk.hamiltonian_tilde(ctx, dk.H_k_tilde(ctx, 3, p)),
                    dk.H_k_tilde(ctx, 3, dk.hamiltonian_tilde(ctx, p)),
                )
            )
        return all_of(outs)

    return [
        Check("h3.phi2_laguerre2", "H^(3) eigenvalues on phi_2 and L_2", phi2_L2, slow=True),
        Check("h3.w2", "H^(3) on w_2", w2, slow=True),
        Check("h3.commutes_H", "H^(3) commutes with the Hamiltonian", commutes, slow=True),
    ]


# ---------------------------------------------------------------------------
# Cherednik-algebra identities


def suite_cherednik(cfg: VerifyConfig) -> list:
    ctx = dk.default_context()

    def h2_operator():
        outs = []
        for p in basis_up_to(3):
            outs.append(compare(dk.H_k_tilde(ctx, 2, p), kn.h2_rhs_poly(ctx, p)))
        return all_of(outs)

    def h2_kernel():
        s = kn.KernelSum.kernel(ctx=ctx)
        lhs = kn.op_H_k(s, 2)
        rhs = kn.h2_rhs(s)
        out = Outcome(lhs == rhs, {"kernel_terms": len(lhs)})
        if not out.passed:
            out.witness["difference_terms"] = len(lhs - rhs)
        return out

    def h2_sensitivity():
        s = kn.KernelSum.kernel(ctx=ctx)
        lhs = kn.op_H_k(s, 2)
        bad = kn.h2_rhs(s) - kn.op_class_sum(s, "rho3").scale(w**2 * k**2)
        return not (lhs == bad)

    def invariant_constant():
        return all(kn.invariant_group_constant(p, ctx) for p in (
            MultiPoly.const(1), wv.invariant_q(2), wv.invariant_q(6), wv.invariant_phi(6)
        ))

    def h1_kernel():
        s = kn.KernelSum.kernel(ctx=ctx)
        return kn.op_H_k(s, 1) == kn.op_hamiltonian(s).scale(2 * (TAU + 2))

    def soundness():
        rng = random.Random(cfg.seed)
        outs = []
        words = [
            ([("D", E[0])], lambda p: dk.dunkl(ctx, p, E[0])),
            ([("D", E[1]), ("x", E[2])], lambda p: MultiPoly.var(2) * dk.dunkl(ctx, p, E[1])),
            ([("lap",)], lambda p: dk.dunkl_laplacian(ctx, p)),
            ([("H",)], lambda p: dk.hamiltonian_tilde(ctx, p)),
            ([("J",)], lambda p: dk.angular_J_square(ctx, p)),
            ([("Ha", Y0)], lambda p: dk.H_a_tilde(ctx, Y0, p)),
        ]
        for word, fn in words:
            p = random_poly(rng, 3, terms=3)
            outs.append(kn.soundness_check(word, p, fn))
        return all(outs)

    def coherence():
        s = kn.KernelSum.kernel(MultiPoly.var(0) * MultiPoly.var(1) + MultiPoly.var(2), ctx)
        g = ctx.group
        return all(kn.group_coherence(s, i, vec(1, 2, TAU)) for i in range(0, len(g), 13))

    def h3h5():
        wit = kn.kappa0_commutator(3, "Hk", 5)
        return Outcome(not wit.is_zero(), {"witness_terms": len(wit.terms())})

    return [
        Check("cherednik.H2_operator", "H^(2) relation on P<=3", h2_operator, slow=True),
        Check("cherednik.H2_kernel", "H^(2) relation on 1 K(x,y)", h2_kernel, slow=True),
        Check("cherednik.H2_sensitivity", "perturbed H^(2) relation is rejected", h2_sensitivity, slow=True),
        Check("cherednik.H2_invariant_constant", "group terms on invariants", invariant_constant, slow=True),
        Check("cherednik.H1_kernel", "H^(1) relation on 1 K(x,y)", h1_kernel),
        Check("cherednik.soundness", "kernel sums at y = 0 match direct application", soundness),
        Check("cherednik.coherence", "w D_a w^{-1} = D_{a w^{-1}} on kernel sums", coherence),
        Check("cherednik.H3_H5", "[H^(3), H^(5)] nonzero at kappa = 0", h3h5, slow=True),
    ]


def suite_kappa0(cfg: VerifyConfig) -> list:
    def j1():
        r = kn.kappa0_J_of_one()
        return Outcome(r["holds"], None if r["holds"] else {"value": str(r["value"])})

    def hj():
        return kn.kappa0_H_J_commutator().is_zero()

    def h3j():
        wit = kn.kappa0_commutator(3, "J")
        return Outcome(not wit.is_zero(), {"witness_terms": len(wit.terms()), "witness": wit.to_json()})

    return [
        Check("kappa0.J_of_one", "J applied to the kernel at kappa = 0", j1),
        Check("kappa0.H_J", "[H, J] = 0 at kappa = 0", hj),
        Check("kappa0.H3_J", "[H^(3), J] nonzero at kappa = 0", h3j),
    ]


# ---------------------------------------------------------------------------
# Macdonald ratio


def suite_macdonald(cfg: VerifyConfig) -> list:
    def at_zero():
        r = wv.macdonald_ratio_check("at_kappa", 0)
        return compare(r["value"], r["formula"])

    def symbolic():
        r = wv.macdonald_ratio_check("symbolic")
        return compare(r["value"], r["formula"])

    def masses():
        outs = []
        for k0 in (1,):
            outs.append(compare(wv.macdonald_mass_ratio(k0), wv.macdonald_ratio_formula().specialize(kappa=k0)))
        return all_of(outs)

    return [
        Check("macdonald.kappa0", "alternating polynomial norm at kappa = 0", at_zero),
        Check("macdonald.symbolic", "c_k / c_{k+1} symbolically", symbolic, slow=True),
        Check("macdonald.masses", "Gaussian mass ratio of h_2^2 and h_1^2", masses, slow=True),
    ]


# ---------------------------------------------------------------------------
# Monte Carlo


def suite_numeric(cfg: VerifyConfig) -> list:
    from .numeric import float_eval, mc_pairing

    def mc_phiG6(proposal):
        def check():
            p = wv.invariant_phi(6)
            exact = float(param_eval(wv.closed_form_invariant_norms()[6], Fraction(1, 2), 1))
            est, se = mc_pairing(p, p, 0.5, 1.0, 1_000_000, seed=cfg.seed, proposal=proposal)
            z = (est - exact) / se
            return Outcome(
                abs(z) <= 3,
                {"estimate": est, "stderr": se, "relative_stderr": se / exact, "exact": exact, "z": z},
            )

        return check

    def float_paths():
        fam = wv.family(Y0)
        y = [float(c) for c in Y0]
        outs = [abs(float_eval(fam.q(1), y, 0) - float(TAU + 2)) < 1e-12]
        exact = float(param_eval(fam.phi(2).evaluate(list(Y0)), Fraction(1, 3), 2))
        approx = float_eval(fam.phi(2), y, Fraction(1, 3), 2)
        outs.append(abs(approx - exact) <= 1e-10 * abs(exact))
        return all(outs)

    return [
        Check("numeric.float_eval", "float evaluation against exact values", float_paths),
        Check("numeric.mc_phiG6", "Monte-Carlo norm of phi^G_6 at kappa = 1/2", mc_phiG6("radial")),
        Check("numeric.mc_phiG6_gaussian", "same, Gaussian proposal", mc_phiG6("gaussian")),
    ]


# ---------------------------------------------------------------------------
# eigenvalue constant


def suite_eigen(cfg: VerifyConfig) -> list:
    def adjudicate():
        rows = wv.eigenvalue_adjudication(6)
        ok = all(r["computed"] is not None for r in rows)
        verdict = (
            "omega(3 + 30 kappa + 2n)"
            if all(r["matches_E_n"] for r in rows)
            else "omega(15 kappa + 2n + 3)"
            if all(r["matches_alternative"] for r in rows)
            else "neither"
        )
        note = (
            "computed eigenvalue is omega(3 + 30 kappa + 2n); the alternative "
            "constant omega(15 kappa + 2n + 3) is inconsistent with it"
            if verdict == "omega(3 + 30 kappa + 2n)"
            else f"computed constant: {verdict}"
        )
        return Outcome(
            ok and verdict != "neither",
            {
                "note": note,
                "verdict": verdict,
                "eigenvalues": {r["n"]: str(r["computed"]) for r in rows},
            },
        )

    return [Check("eigen.w_n", "Hamiltonian eigenvalue of w_n", adjudicate)]


SUITES: dict = {
    "group": suite_group,
    "dunkl": suite_dunkl,
    "operators": suite_operators,
    "genfun": suite_genfun,
    "norms": suite_norms,
    "moments": suite_moments,
    "jsquare": suite_jsquare,
    "h3": suite_h3,
    "cherednik": suite_cherednik,
    "kappa0": suite_kappa0,
    "macdonald": suite_macdonald,
    "numeric": suite_numeric,
    "eigen": suite_eigen,
}

# CLI aliases grouping suites by module
ALIASES: dict = {
    "waves": ["genfun", "norms", "jsquare", "eigen"],
    "all": list(SUITES),
}


def run_suite(name: str, cfg: VerifyConfig | None = None) -> VerifyReport:
    cfg = cfg or VerifyConfig()
    if name not in SUITES:
        raise KeyError(name)
    return run_checks(name, SUITES[name](cfg), slow=cfg.slow)


def expand(name: str) -> list:
    if name in SUITES:
        return [name]
    if name in ALIASES:
        return ALIASES[name]
    raise KeyError(name)


__all__ = [
    "ALIASES",
    "Check",
    "CheckResult",
    "Outcome",
    "SUITES",
    "VerifyReport",
    "compare",
    "expand",
    "random_poly",
    "run_checks",
    "run_suite",
]
