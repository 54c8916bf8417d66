#!/usr/bin/env python3
"""Independent oracle for the bounds golden file.

Evaluates every bound formula with fractions.Fraction and writes the JSON the
C++ `bounds` command is expected to produce. Run from this directory:

    python3 gen_bounds_golden.py > bounds_golden.json
"""
import json
from fractions import Fraction
from math import comb

INSTANCES = [(3, 1), (3, 2), (4, 2), (5, 2), (7, 2)]


def fmt(q: Fraction):
    if q.denominator == 1:
        return q.numerator
    scaled = (abs(q.numerator) * 200000 + q.denominator) // (2 * q.denominator)
    whole, frac = divmod(scaled, 100000)
    sign = "-" if q < 0 else ""
    return f"{q.numerator}/{q.denominator} (≈ {sign}{whole}.{frac:05d})"


def is_pow2(v):
    return v > 0 and v & (v - 1) == 0


def report(k, r):
    n = 2 * k + r
    base = Fraction(9 * k, 4) + Fraction(9 * (r + 3), 8)
    inj = base ** r
    thm1 = 2 * inj
    out = {
        "k": k, "r": r, "n": n,
        "clique_lower": comb(k + 2 * r, r),
        "trivial_upper": comb(k + r, r) ** 2,
        "thm1_upper": fmt(thm1),
        "thm1_upper_floor": thm1.numerator // thm1.denominator,
        "thm1_applicable": r <= k - 2,
        "injective_upper": fmt(inj),
        "injective_upper_floor": inj.numerator // inj.denominator,
        "thm2a_upper": n ** r if is_pow2(n) else None,
        "thm2b_upper": (n + 1) ** r if is_pow2(n + 1) else None,
    }
    cands = []
    if k >= 3:
        cands.append(("trivial_upper", Fraction(out["trivial_upper"])))
    if out["thm1_applicable"]:
        cands.append(("thm1_upper", thm1))
    if out["thm2a_upper"] is not None:
        cands.append(("thm2a_upper", Fraction(out["thm2a_upper"])))
    if out["thm2b_upper"] is not None:
        cands.append(("thm2b_upper", Fraction(out["thm2b_upper"])))
    cor3 = []
    for t in range(1, 17):
        for tp in range(1, t):
            if t % tp or 2 ** tp < r + 2:
                continue
            for plus, label in ((0, "i"), (1, "ii")):
                if 2 ** t - 2 ** tp + plus == n:
                    up = (n + 2 ** tp) ** r
                    cor3.append({"variant": label, "t": t, "t_prime": tp, "upper": up})
                    name = "cor3_ii" if plus else "cor3_i"
                    cands.append((f"{name}(t={t},t'={tp})", Fraction(up)))
    out["cor3_uppers"] = cor3
    if r == 1:
        rows = []
        named = [
            ("4k+2", Fraction(4 * k + 2), k >= 2),
            ("3k+2", Fraction(3 * k + 2), k >= 3),
            ("8k/3+20/3", Fraction(8 * k, 3) + Fraction(20, 3), k >= 2),
            ("32k/15+32", Fraction(32 * k, 15) + 32, k >= 7),
        ]
        for formula, up, ok in named:
            rows.append({"formula": formula, "applicable": ok, "upper": fmt(up)})
            if ok:
                cands.append(("r1:" + formula, up))
        m = 2
        while 2 ** m - 1 <= 2 * k + 1:
            pm = 2 ** m
            up = Fraction(2 * pm * k, pm - 1) + Fraction(pm * (2 * pm - 3), pm - 1)
            rows.append({"formula": "2^(n+1)k/(2^n-1) + 2^n(2^(n+1)-3)/(2^n-1)", "n": m,
                         "applicable": True, "upper": fmt(up)})
            cands.append((f"r1_family(n={m})", up))
            m += 1
        out["r1_bounds"] = rows
    else:
        out["r1_bounds"] = None
    best = min(cands, key=lambda c: c[1])  # first minimum, matching std::min_element
    out["best_upper"] = best[1].numerator // best[1].denominator
    out["best_source"] = best[0]
    return out


if __name__ == "__main__":
    print(json.dumps([report(k, r) for k, r in INSTANCES], indent=2, ensure_ascii=False))
