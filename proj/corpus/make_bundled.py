"""Regenerates bundled.jsonl: fixed named entries plus seeded random irreducibles."""
import json
import random

import sympy as sp

x = sp.symbols("x")

FIXED = [
    ("lehmer", [1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]),
    ("golden_ratio", [-1, -1, 1]),
    ("sqrt2", [-2, 0, 1]),
    ("one_plus_sqrt2", [-1, -2, 1]),
    ("cbrt2", [-2, 0, 0, 1]),
    ("sqrt3", [-3, 0, 1]),
    ("quarter_one_plus_sqrt5", [-1, -2, 4]),
    ("cyclic_cubic_7", [-1, -2, 1, 1]),
    ("cyclic_cubic_9", [1, -3, 0, 1]),
    ("two_zeta3", [4, 2, 1]),
    ("three_zeta4", [9, 0, 1]),
    ("two_zeta5", [16, 8, 4, 2, 1]),
    ("one_plus_zeta5", [1, -2, 4, -3, 1]),
    ("one_plus_zeta7", [1, -3, 9, -13, 11, -5, 1]),
    ("two_zeta8", [16, 0, 0, 0, 1]),
    ("smyth_plastic", [-1, -1, 0, 1]),
    ("salem_deg4", [1, -1, -1, -1, 1]),
    ("fourth_root_2", [-2, 0, 0, 0, 1]),
    ("three_halves", [-3, 2]),
    ("sqrt2_plus_sqrt3", [1, 0, -10, 0, 1]),
]

BASED = [
    ("sqrt3_over_qi", [-3, 0, 1], [1, 0, 1]),
    ("sqrt2_over_q_sqrt3", [-2, 0, 1], [-3, 0, 1]),
    ("golden_over_q_zeta3", [-1, -1, 1], [1, 1, 1]),
    ("cbrt2_over_q_zeta3", [-2, 0, 0, 1], [1, 1, 1]),
]

KRONECKER = [("phi7", [1, 1, 1, 1, 1, 1, 1]), ("phi12", [1, 0, -1, 0, 1])]


def irreducible_non_kronecker(c):
    p = sp.Poly(list(reversed(c)), x)
    if not p.is_irreducible:
        return False
    # Mahler measure > 1 is certified later; here exclude cyclotomic factors cheaply.
    return not p.is_cyclotomic


def main():
    rng = random.Random(20240611)
    out = []
    for name, c in FIXED:
        out.append({"name": name, "coeffs": c})
    for name, c, b in BASED:
        out.append({"name": name, "coeffs": c, "base": b})
    while len(out) < 40:
        d = rng.randint(2, 10)
        c = [rng.randint(-3, 3) for _ in range(d)] + [rng.choice([1, 1, 1, 2, -1])]
        if c[0] == 0 or any(e["coeffs"] == c for e in out) or not irreducible_non_kronecker(c):
            continue
        out.append({"name": f"random_{len(out)}_deg{d}", "coeffs": c})
    for name, c in KRONECKER:
        out.append({"name": name, "coeffs": c})
    with open("bundled.jsonl", "w") as f:
        for e in out:
            f.write(json.dumps(e, separators=(",", ":")) + "\n")


if __name__ == "__main__":
    main()
