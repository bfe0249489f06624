"""Command-line interface: ``h3dunkl <verb> ...``.

Verbs: group, dunkl, waves, pair, numeric, verify.  Every verb accepts
``--format text|json``.  Exit status is 0 on success, 1 when a verification
fails and 2 on usage errors (bad arguments, unparsable polynomials, degree
above the cap).

JSON schema.  Object verbs print ``{"verb": ..., "result": {...}}``; polynomials
appear both as text (``"poly"``) and as ``"terms"``, a list of
``{"exponents": [...], "coefficient": "..."}``; scalars are strings in the
polynomial grammar.  ``verify`` prints ``{"passed": bool, "suites": [report,
...]}`` where each report has ``suite``, ``passed`` and ``results`` entries
with ``id``, ``anchor``, ``status``, ``elapsed`` and ``witness``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import dunkl as dk
from . import waves as wv
from ._parse import ParseError
from .config import VerifyConfig, default_degree_cap
from .group import VERTICES, h3_group
from .polyalg import MultiPoly
from .scalars import OMEGA, TAU, DenominatorVanishes

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _poly_json(p: MultiPoly) -> dict:
    return {"poly": str(p), "terms": p.to_json_obj()}


def _emit(args, verb: str, result: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps({"verb": verb, "result": result}, indent=2, default=str))
    else:
        print(text)


def _read_poly(args, name: str = "poly") -> MultiPoly:
    text = getattr(args, name, None)
    path = getattr(args, f"{name}_file", None)
    if path:
        text = Path(path).read_text()
    if text is None:
        raise UsageError(f"--{name.replace('_', '-')} or --{name.replace('_', '-')}-file is required")
    return MultiPoly.parse(text.strip())


def _vector(text: str):
    from .scalars import GoldenNumber

    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated components, got {text!r}")
    return tuple(GoldenNumber.parse(p) for p in parts)


# ---------------------------------------------------------------------------
# verbs


def cmd_group(args) -> int:
    t0 = time.perf_counter()
    g = h3_group()
    census = g.census()
    classes = {tag: len(g.class_members(tag)) for tag in ("rho2", "rho3", "rho5_1", "rho5_2")}
    elapsed = time.perf_counter() - t0
    result = {"census": census, "classes": classes, "seconds": round(elapsed, 3)}
    text = "\n".join(f"{key}: {val}" for key, val in census.items())
    _emit(args, "group", result, text)
    return EXIT_OK


_DUNKL_OPS = {
    "D": lambda ctx, p, a: dk.dunkl(ctx, p, a),
    "laplacian": lambda ctx, p, a: dk.dunkl_laplacian(ctx, p),
    "hamiltonian": lambda ctx, p, a: dk.hamiltonian_tilde(ctx, p),
    "J": lambda ctx, p, a: dk.angular_J_square(ctx, p),
    "E": lambda ctx, p, a: dk.heat_exp(ctx, p, 1),
    "harmonic": lambda ctx, p, a: dk.harmonic_project(ctx, p),
    "H_a": lambda ctx, p, a: dk.H_a_tilde(ctx, a, p),
}


def cmd_dunkl(args) -> int:
    p = _read_poly(args)
    ctx = dk.default_context()
    a = _vector(args.dir) if args.dir else (1, 0, 0)
    out = _DUNKL_OPS[args.op](ctx, p, a)
    _emit(args, "dunkl", {"op": args.op, "input": str(p), **_poly_json(out)}, str(out))
    return EXIT_OK


def cmd_pair(args) -> int:
    ctx = dk.default_context()
    p = _read_poly(args, "p")
    q = _read_poly(args, "q")
    if args.kind == "kw":
        val = dk.pairing_kw(ctx, p, q)
    elif args.kind == "L2":
        val = dk.pairing_L2(ctx, p, q)
    else:
        if args.kappa0 is None:
            raise UsageError("--kappa0 is required for --kind moments")
        val = dk.pairing_L2_moments(ctx, p, q, args.kappa0)
    _emit(args, "pair", {"kind": args.kind, "value": str(val)}, str(val))
    return EXIT_OK


def _family(args) -> wv.QFamily:
    try:
        y0 = VERTICES.I[args.vertex]
    except IndexError:
        raise UsageError(f"--vertex must be in 0..{len(VERTICES.I) - 1}") from None
    return wv.family(y0, args.cap)


def cmd_waves(args) -> int:
    kind = args.kind
    fam = _family(args)
    result: dict = {"kind": kind, "n": args.n, "vertex": [str(c) for c in fam.y0]}
    if kind in ("q", "w", "phi"):
        if args.invariant:
            poly = {"q": wv.invariant_q, "w": wv.invariant_w, "phi": wv.invariant_phi}[kind](args.n, fam.cap)
            result["invariant"] = True
        else:
            poly = {"q": fam.q, "w": fam.w, "phi": fam.phi}[kind](args.n)
        result.update(_poly_json(poly))
        text = str(poly)
        if args.norm:
            ctx = dk.default_context()
            if args.invariant and kind == "phi":
                if args.n % 2:
                    raise UsageError("invariant families need even n")
                norm = wv.norm_invariant_phi(args.n // 2)
                closed = wv.closed_form_invariant_norms().get(args.n)
                if closed is not None:
                    result["closed_form_matches"] = norm == closed
            else:
                norm = dk.pairing_L2(ctx, poly, poly)
            result["norm"] = str(norm)
            text += f"\nnorm: {norm}"
    elif kind == "invariant":
        poly = wv.invariant_phi(args.n, fam.cap)
        result.update(_poly_json(poly))
        text = str(poly)
    elif kind == "norm":
        family_name = args.family
        if family_name == "w":
            h = args.n // 2
            base = wv.nu(args.n) / (2 * OMEGA) ** args.n * TAU ** (2 * h) * wv.Y0_seq(h)
            norm = base if args.n % 2 == 0 else base * (TAU + 2)
        elif family_name == "phi":
            norm = wv.nu(args.n) / (2 * OMEGA) ** args.n * fam.phi(args.n).evaluate(list(fam.y0))
        elif family_name == "phiG":
            if args.n % 2:
                raise UsageError("phiG needs even n")
            norm = wv.norm_invariant_phi(args.n // 2)
        else:
            _, norm = wv.laguerre_wave(args.n, args.m, args.source, fam)
        result.update({"family": family_name, "m": args.m, "norm": str(norm)})
        text = str(norm)
    elif kind == "eigen":
        rows = wv.eigenvalue_adjudication(args.n, fam)
        result["rows"] = [{**r, "computed": str(r["computed"])} for r in rows]
        text = "\n".join(
            f"n={r['n']}: {r['computed']}  E_n={r['matches_E_n']}  alt={r['matches_alternative']}"
            for r in rows
        )
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _emit(args, "waves", result, text)
    return EXIT_OK


def cmd_numeric(args) -> int:
    from .numeric import mc_pairing

    if args.poly or args.poly_file:
        p = _read_poly(args)
    else:
        p = wv.invariant_phi(args.n)
    t0 = time.perf_counter()
    est, se = mc_pairing(
        p, p, args.kappa, args.omega, args.samples, args.seed, proposal=args.proposal
    )
    result = {"estimate": est, "stderr": se, "samples": args.samples, "seconds": time.perf_counter() - t0}
    try:
        exact = dk.pairing_L2(dk.default_context(), p, p).specialize(
            kappa=Fraction(args.kappa), omega=Fraction(args.omega)
        )
        ex = float(exact.to_golden())
        result.update({"exact": ex, "z": (est - ex) / se if se else None})
    except (DenominatorVanishes, ValueError):
        pass
    text = "\n".join(f"{key}: {val}" for key, val in result.items())
    _emit(args, "numeric", result, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from . import verify as vf

    cfg = VerifyConfig(slow=args.slow, seed=args.seed)
    try:
        names = vf.expand(args.suite)
    except KeyError:
        raise UsageError(
            f"unknown suite {args.suite!r}; choose from {sorted(list(vf.SUITES) + list(vf.ALIASES))}"
        ) from None
    reports = []
    for name in names:
        t0 = time.perf_counter()
        rep = vf.run_suite(name, cfg)
        reports.append(rep)
        if args.format == "text":
            print(rep.to_text())
            print(f"  suite time {time.perf_counter() - t0:.1f}s")
            sys.stdout.flush()
    passed = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": passed, "suites": [r.to_json_obj() for r in reports]}, indent=2, default=str))
    return EXIT_OK if passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(prog="h3dunkl", description="Dunkl oscillator computations for H3")
    sub = ap.add_subparsers(dest="verb", required=True)

    sub.add_parser("group", parents=[common], help="group census")

    d = sub.add_parser("dunkl", parents=[common], help="apply an operator to a polynomial")
    d.add_argument("--op", choices=sorted(_DUNKL_OPS), default="D")
    d.add_argument("--dir", help="direction a as 'a1,a2,a3' (tau allowed)")
    d.add_argument("--poly")
    d.add_argument("--poly-file")

    p = sub.add_parser("pair", parents=[common], help="pair two polynomials")
    p.add_argument("--kind", choices=("kw", "L2", "moments"), default="L2")
    p.add_argument("--kappa0", type=int)
    for name in ("p", "q"):
        p.add_argument(f"--{name}")
        p.add_argument(f"--{name}-file")

    w = sub.add_parser("waves", parents=[common], help="wavefunction families")
    w.add_argument("kind", choices=("q", "w", "phi", "invariant", "norm", "eigen"))
    w.add_argument("--n", type=int, required=True)
    w.add_argument("--m", type=int, default=0)
    w.add_argument("--vertex", type=int, default=0)
    w.add_argument("--cap", type=int, default=None, help="degree cap (default from environment)")
    w.add_argument("--invariant", action="store_true")
    w.add_argument("--norm", action="store_true")
    w.add_argument("--family", choices=("w", "phi", "phiG", "laguerre"), default="phi")
    w.add_argument("--source", choices=("vertex", "invariant"), default="vertex")

    n = sub.add_parser("numeric", parents=[common], help="Monte-Carlo pairing")
    n.add_argument("action", choices=("pair",))
    n.add_argument("--kappa", type=float, default=0.5)
    n.add_argument("--omega", type=float, default=1.0)
    n.add_argument("--samples", type=int, default=1_000_000)
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--n", type=int, default=6, help="degree of phi^G when no polynomial is given")
    n.add_argument("--proposal", choices=("gaussian", "radial"), default="radial")
    n.add_argument("--poly")
    n.add_argument("--poly-file")

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("suite", help="suite name, 'waves' or 'all'")
    v.add_argument("--slow", action="store_true")
    v.add_argument("--seed", type=int, default=VerifyConfig.seed)
    return ap


_COMMANDS = {
    "group": cmd_group,
    "dunkl": cmd_dunkl,
    "pair": cmd_pair,
    "waves": cmd_waves,
    "numeric": cmd_numeric,
    "verify": cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if getattr(args, "cap", None) is None and hasattr(args, "cap"):
        args.cap = default_degree_cap()
    try:
        return _COMMANDS[args.verb](args)
    except (UsageError, ParseError, wv.DegreeCapExceeded, dk.NotInteger, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
