#!/usr/bin/env python3
# Copyright 2026 The obda Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Arbitrary-precision reference values for the closed-form bounds.

Writes CSV files under tests/data that the C++ tests compare against.  Every
value is evaluated with mpmath at 50 digits and printed with 20 significant
digits; the inputs are printed with repr() so the C++ side parses exactly the
same doubles.
"""

import argparse
import csv
import os
import random

import mpmath as mp

mp.mp.dps = 50
SQRT6 = mp.sqrt(6)


def csi_term(p):
    return p["sigma_delta"] / mp.sqrt(mp.sqrt(p["g_th"]) - p["delta_max"])


def denominator(p, which):
    K, rho, alpha = mp.mpf(p["K"]), mp.mpf(p["rho"]), mp.mpf(p["alpha"])
    if which == "noiseless":
        return mp.mpf(1)
    if which == "awgn":
        return 1 - 1 / (K * mp.sqrt(rho))
    den = 1 - (1 - alpha) ** K - 2 / (alpha * K * mp.sqrt(rho))
    if which == "imperfect":
        den -= 2 * SQRT6 * csi_term(p) / mp.sqrt(alpha * K)
    return den


def conv_bound(p, c, which):
    K, rho, alpha = mp.mpf(p["K"]), mp.mpf(p["rho"]), mp.mpf(p["alpha"])
    gs = mp.mpf(c["gamma"]) * mp.mpf(c["sigma1"])
    a = 1 / denominator(p, which)
    if which == "noiseless":
        b = mp.mpf(0)
    elif which == "awgn":
        b = 2 * gs / (K * mp.sqrt(rho))
    elif which == "fading":
        b = 4 * gs / (alpha * K * mp.sqrt(rho))
    else:
        b = (4 / (alpha * K * mp.sqrt(rho)) + 4 * SQRT6 * csi_term(p) / mp.sqrt(alpha * K)) * gs
    inner = (mp.sqrt(c["L1"]) * (mp.mpf(c["F0"]) - c["Fstar"] + mp.mpf(c["gamma"]) / 2)
             + 2 * gs / mp.sqrt(K) + b)
    return a, b, a / mp.sqrt(c["N"]) * inner


def perr_awgn(K, S, rho):
    K, S, rho = mp.mpf(K), mp.mpf(S), mp.mpf(rho)
    return 1 / (mp.sqrt(K) * S) + 1 / (K * S * mp.sqrt(rho)) + 1 / (2 * K * mp.sqrt(rho))


def perr_fading(K, alpha, S, rho):
    K, alpha, S, rho = mp.mpf(K), mp.mpf(alpha), mp.mpf(S), mp.mpf(rho)
    ak = alpha * K
    return (mp.mpf(1) / 2 * (1 - alpha) ** K + SQRT6 / (mp.sqrt(ak) * S)
            + (2 / ak) / mp.sqrt(rho) * (1 / S + mp.mpf(1) / 2))


def perr_imperfect(p, S):
    K, alpha, S, rho = mp.mpf(p["K"]), mp.mpf(p["alpha"]), mp.mpf(S), mp.mpf(p["rho"])
    ak = alpha * K
    return (mp.mpf(1) / 2 * (1 - alpha) ** K
            + SQRT6 / mp.sqrt(ak) * (1 / S + (2 / S + 1) * csi_term(p))
            + (2 / ak) / mp.sqrt(rho) * (1 / S + mp.mpf(1) / 2))


def fmt(x):
    return mp.nstr(x, 20, strip_zeros=False, min_fixed=-1, max_fixed=-1)


def random_point(rng, which):
    while True:
        alpha = 1.0 if which in ("noiseless", "awgn") else rng.uniform(0.3, 0.99)
        g_th = -float(mp.log(alpha)) if alpha < 1 else 0.0
        sd = rng.uniform(0.0, 0.3 * g_th ** 0.5 / 3 ** 0.5) if which == "imperfect" else 0.0
        p = {
            "K": rng.randint(1, 2000),
            "rho": 10 ** rng.uniform(0.0, 4.0),
            "alpha": alpha,
            "sigma_delta": sd,
            "g_th": g_th,
            "delta_max": sd * 3 ** 0.5,
        }
        F0 = rng.uniform(0.0, 100.0)
        c = {
            "L1": rng.uniform(0.1, 100.0),
            "sigma1": rng.uniform(0.0, 50.0),
            "F0": F0,
            "Fstar": rng.uniform(0.0, F0),
            "gamma": rng.uniform(0.1, 10.0),
            "N": rng.randint(1, 1000),
        }
        if denominator(p, which) > mp.mpf("0.05"):
            return p, c


def write_conv(path, rng):
    cols = ["scenario", "K", "rho", "alpha", "sigma_delta", "g_th", "delta_max",
            "L1", "sigma1", "F0", "Fstar", "gamma", "N", "a", "b", "rhs"]
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(cols)
        for which in ("noiseless", "awgn", "fading", "imperfect"):
            for _ in range(50):
                p, c = random_point(rng, which)
                a, b, rhs = conv_bound(p, c, which)
                w.writerow([which] + [repr(p[k]) for k in ("K", "rho", "alpha", "sigma_delta", "g_th", "delta_max")]
                           + [repr(c[k]) for k in ("L1", "sigma1", "F0", "Fstar", "gamma", "N")]
                           + [fmt(a), fmt(b), fmt(rhs)])


def write_perr(path, rng):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["kind", "K", "S", "rho", "alpha", "sigma_delta", "g_th", "delta_max", "value"])
        alpha = 0.9
        g_th = -float(mp.log(alpha))
        fixed = {"K": 100, "rho": 10.0, "alpha": alpha, "sigma_delta": 0.01, "g_th": g_th,
                 "delta_max": 0.01 * 3 ** 0.5}
        w.writerow(["awgn", 100, 1.0, 10.0, 1.0, 0.0, 0.0, 0.0, fmt(perr_awgn(100, 1, 10))])
        w.writerow(["fading", 100, 1.0, 10.0, alpha, 0.0, 0.0, 0.0, fmt(perr_fading(100, alpha, 1, 10))])
        w.writerow(["imperfect", 100, 1.0, 10.0, alpha, 0.01, repr(g_th), repr(fixed["delta_max"]),
                    fmt(perr_imperfect(fixed, 1))])
        for _ in range(30):
            K = rng.randint(1, 1000)
            S = 10 ** rng.uniform(-1, 1)
            rho = 10 ** rng.uniform(0, 3)
            a = rng.uniform(0.3, 0.99)
            gt = -float(mp.log(a))
            sd = rng.uniform(0.0, 0.3 * gt ** 0.5 / 3 ** 0.5)
            p = {"K": K, "rho": rho, "alpha": a, "sigma_delta": sd, "g_th": gt, "delta_max": sd * 3 ** 0.5}
            w.writerow(["awgn", K, repr(S), repr(rho), 1.0, 0.0, 0.0, 0.0, fmt(perr_awgn(K, S, rho))])
            w.writerow(["fading", K, repr(S), repr(rho), repr(a), 0.0, 0.0, 0.0, fmt(perr_fading(K, a, S, rho))])
            w.writerow(["imperfect", K, repr(S), repr(rho), repr(a), repr(sd), repr(gt), repr(p["delta_max"]),
                        fmt(perr_imperfect(p, S))])


def write_e1(path):
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["x", "e1"])
        for i in range(100):
            x = float(mp.mpf(10) ** (-3 + mp.mpf(i) * (mp.log10(20) + 3) / 99))
            w.writerow([repr(x), fmt(mp.e1(x))])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "..", "tests", "data"))
    ap.add_argument("--seed", type=int, default=20260101)
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    rng = random.Random(args.seed)
    write_conv(os.path.join(args.out, "conv_bound_golden.csv"), rng)
    write_perr(os.path.join(args.out, "perr_golden.csv"), rng)
    write_e1(os.path.join(args.out, "e1_golden.csv"))


if __name__ == "__main__":
    main()
