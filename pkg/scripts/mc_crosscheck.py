"""Monte-Carlo estimate of ||phi^G_6||^2 against the exact value.

    python scripts/mc_crosscheck.py --kappa 0.5 --samples 1000000 --proposal gaussian

Prints the estimate, its standard error, the exact value and the z-score.
"""

from __future__ import annotations

import argparse
from fractions import Fraction

from h3dunkl import waves as wv
from h3dunkl.config import MonteCarloConfig
from h3dunkl.numeric import mc_pairing
from h3dunkl.scalars import param_eval

TAU_F = (1 + 5**0.5) / 2


def main() -> int:
    defaults = MonteCarloConfig()
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kappa", type=float, default=defaults.kappa)
    parser.add_argument("--omega", type=float, default=defaults.omega)
    parser.add_argument("--samples", type=int, default=defaults.samples)
    parser.add_argument("--seed", type=int, default=defaults.seed)
    parser.add_argument("--proposal", choices=["gaussian", "radial"], default=defaults.proposal)
    args = parser.parse_args()

    exact_g = param_eval(wv.norm_invariant_phi(3), Fraction(args.kappa), Fraction(args.omega))
    exact = float(exact_g.a) + float(exact_g.b) * TAU_F
    p = wv.invariant_phi(6)
    est, se = mc_pairing(p, p, args.kappa, args.omega, args.samples, args.seed, proposal=args.proposal)
    z = (est - exact) / se
    print(f"estimate {est:.6g} +- {se:.3g}, exact {exact:.6g}, z = {z:+.2f}")
    return 0 if abs(z) <= 3 else 1


if __name__ == "__main__":
    raise SystemExit(main())
