"""Compute the Fischer-pairing norm of the alternating polynomial and compare it
with the closed-form ratio c_kappa / c_{kappa+1}.

    python scripts/macdonald_ratio.py [--kappa K]

Without --kappa the comparison is symbolic in kappa and omega.
"""

from __future__ import annotations

import argparse
import time

from h3dunkl import waves as wv


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--kappa", type=int, default=None, help="specialize to this integer kappa")
    args = parser.parse_args()
    t0 = time.perf_counter()
    if args.kappa is None:
        r = wv.macdonald_ratio_check("symbolic")
    else:
        r = wv.macdonald_ratio_check("at_kappa", args.kappa)
    ok = r["value"] == r["formula"]
    print(f"pairing  : {r['value']}")
    print(f"formula  : {r['formula']}")
    print(f"agree    : {ok}  ({time.perf_counter() - t0:.1f}s)")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
