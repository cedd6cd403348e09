#!/usr/bin/env python3
"""Validate kummer_u_intb against 40-digit references across its full domain.

Covers the three evaluation regimes and their hand-offs: the logarithmic
series at small z, the Poincare expansion at large z, and the integral-seeded
downward recurrence in the intermediate band (moderate z, large |a|) where
both expansions lose digits. Also samples near-integer a down to 1e-11 from
the Laguerre switch, and checks that the returned error estimate is not
misleading (est >= 0.1 x true error whenever the true relative error exceeds
1e-12).

Run from the repository root after building with -DHC2D_BUILD_PYTHON=ON:
    PYTHONPATH=build/python python3 .devtools/check_u_intermediate.py
"""
import random

import mpmath as mp

import hc2d

mp.mp.dps = 40

AVALS = [-0.3, -1.7, -3.3, -6.5, -10.5803, -15.2, -22.7, -30.9,
         -11 + 1e-10, -11 + 1e-11, -3 + 1e-10, -26 + 1e-11]
ZVALS = [0.5, 1, 2, 4, 8, 12, 14, 20, 32, 40.0001, 60, 76, 100, 150, 220, 300, 400]
BVALS = [1, 2, 3, 5, 9, 12]


def sweep_grid():
    worst = (0.0, None)
    lies = []
    for b in BVALS:
        for a in AVALS:
            for z in ZVALS:
                r = hc2d.kummer_u_intb(a, b, z)
                ref = mp.hyperu(mp.mpf(a), b, mp.mpf(z))
                if ref == 0:
                    continue
                rel = float(abs((mp.mpf(r.value) - ref) / ref))
                if rel > worst[0]:
                    worst = (rel, (a, b, z))
                terr = float(abs(mp.mpf(r.value) - ref))
                if terr > 0 and r.est_abs_error / terr < 0.1 and rel > 1e-12:
                    lies.append((r.est_abs_error / terr, a, b, z, rel))
    return worst, lies


def sweep_random(n=600, seed=20260819):
    rng = random.Random(seed)
    worst = (0.0, None)
    for trial in range(n):
        b = rng.choice(range(1, 13))
        if trial % 3 == 1:
            a = -rng.randint(0, 30) + rng.choice([-1, 1]) * 10 ** (-rng.uniform(9.5, 11.9))
        else:
            a = -rng.uniform(0.01, 31.0)
        z = 10 ** rng.uniform(-2.2, 2.65)
        r = hc2d.kummer_u_intb(a, b, z)
        ref = mp.hyperu(mp.mpf(a), b, mp.mpf(z))
        if ref == 0:
            continue
        rel = float(abs((mp.mpf(r.value) - ref) / ref))
        if rel > worst[0]:
            worst = (rel, (a, b, z))
    return worst


def main():
    worst, lies = sweep_grid()
    print(f"grid sweep ({len(BVALS) * len(AVALS) * len(ZVALS)} cells): "
          f"worst rel {worst[0]:.2e} at {worst[1]}")
    print(f"misleading estimates (est < 0.1 x true, rel > 1e-12): {len(lies)}")
    for row in lies[:10]:
        print("   ", row)
    rworst = sweep_random()
    print(f"random sweep (600 samples): worst rel {rworst[0]:.2e} at {rworst[1]}")
    assert worst[0] < 1e-10, "grid accuracy regression"
    assert rworst[0] < 1e-10, "random-sample accuracy regression"
    assert not lies, "error estimate became misleading"
    print("OK")


if __name__ == "__main__":
    main()
