#!/usr/bin/env python3
"""Sweep (degree, cameras, image dimension) cells and compare counts to 3en-2.

For every cell the script builds a seeded random arrangement, runs the exact
count with its genericity certificate, recounts through the parameter-space
route on immersed cells, and times each cell individually.  This is the
library-level twin of ``edcurve sweep`` with per-cell wall-clock output, meant
for scaling experiments beyond the default grid.

Usage:
    python scripts/run_sweep.py                      # e,n in 1..4, h in {2,3}
    python scripts/run_sweep.py --e 1..6 --n 1..5 --h 2,3,4 --seed 11
"""

from __future__ import annotations

import argparse
import sys
import time

from edcurve.cli import derive_seed
from edcurve.eddeg import DataInstabilityError, ed_degree_affine, euler_cross_check
from edcurve.scene import Arrangement, random_camera, random_curve, rational_normal_curve


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",")]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--e", default="1..4", help="curve degree range A..B or comma list")
    ap.add_argument("--n", default="1..4", help="camera count range A..B or comma list")
    ap.add_argument("--h", default="2,3", help="image dimensions, comma list (each >= 2)")
    ap.add_argument("--seed", type=int, default=0, help="base seed")
    ap.add_argument("--retries", type=int, default=8,
                    help="reseed attempts per cell before giving up")
    ns = ap.parse_args(argv)
    if any(h < 2 for h in parse_range(ns.h)):
        ap.error("--h values must be >= 2 (closed-form regime)")

    print(f"{'h':>2} {'e':>2} {'n':>2} {'variant':<9} {'ed':>4} {'3en-2':>5} "
          f"{'recount':>7} {'cert':<5} {'ms':>7}")
    bad = 0
    t_all = time.perf_counter()
    for h in parse_range(ns.h):
        for e in parse_range(ns.e):
            variants = [("generic", min(e + 2, 5))]
            if e >= 3:
                variants.append(("monomial", e))
            for variant, N in variants:
                if N < h:
                    continue
                for n in parse_range(ns.n):
                    label = f"sweep:h{h}:e{e}:n{n}:{variant}"
                    f = (rational_normal_curve(e, N) if variant == "monomial"
                         else random_curve(derive_seed(ns.seed, f"{label}:curve"), e, N))
                    t0 = time.perf_counter()
                    rep = None
                    for attempt in range(ns.retries):
                        arr = Arrangement(tuple(
                            random_camera(
                                derive_seed(ns.seed, f"{label}:a{attempt}:cam{i}"),
                                h, N)
                            for i in range(n)))
                        try:
                            rep = ed_degree_affine(
                                f, arr,
                                derive_seed(ns.seed, f"{label}:a{attempt}:data"))
                        except DataInstabilityError:
                            continue
                        if rep.certificate.passes:
                            break
                    if rep is None or not rep.certificate.passes:
                        print(f"{h:>2} {e:>2} {n:>2} {variant:<9} "
                              f"{'-':>4} {3*e*n-2:>5} {'-':>7} fail  "
                              f"{(time.perf_counter()-t0)*1000:>7.1f}")
                        bad += 1
                        continue
                    cross = "-"
                    if rep.certificate.immersion_ok:
                        cross = euler_cross_check(
                            f, arr, derive_seed(ns.seed, f"{label}:euler"))
                    ms = (time.perf_counter() - t0) * 1000
                    ok = (rep.ed_degree == 3 * e * n - 2
                          and (cross == "-" or cross == rep.ed_degree))
                    if not ok:
                        bad += 1
                    print(f"{h:>2} {e:>2} {n:>2} {variant:<9} {rep.ed_degree:>4} "
                          f"{3*e*n-2:>5} {cross!s:>7} {'pass':<5} {ms:>7.1f}"
                          + ("" if ok else "  << MISMATCH"))
    print(f"\ntotal {time.perf_counter() - t_all:.2f}s; "
          f"{'all cells match' if bad == 0 else f'{bad} cell(s) off'}")
    return 0 if bad == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
