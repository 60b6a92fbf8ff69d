#!/usr/bin/env python3
"""Regenerate the sequence fixtures under data/oeis/.

The files are computed locally, not downloaded.  A179525 is produced by
expanding sum_n prod_{i=0}^n ((1+x)^(i+1) - 1) with sympy and cross-checked
against a brute-force count of 0/1 upper-triangular matrices with no zero row
for small sizes.  A158691 is the coefficient list of
sum_n prod_{i=1}^n (1 - (1-x)^(2i-1)).

Usage: gen_fixtures.py [--terms N] [--out DIR]
"""

import argparse
import itertools
from pathlib import Path

import sympy

x = sympy.symbols("x")


def series_coeffs(expr_terms, terms):
    total = sympy.Integer(0)
    for term in expr_terms:
        total += sympy.expand(term)
    poly = sympy.Poly(total, x)
    coeffs = [0] * (terms + 1)
    for (deg,), c in poly.terms():
        if deg <= terms:
            coeffs[deg] = int(c)
    return coeffs


def truncate(expr, terms):
    poly = sympy.Poly(sympy.expand(expr), x)
    return sum(c * x**d for (d,), c in poly.terms() if d <= terms)


def primitive_row_fishburn(terms):
    summands = []
    n = 0
    while True:
        prod = sympy.Integer(1)
        for i in range(n + 1):
            prod = truncate(prod * ((1 + x) ** (i + 1) - 1), terms)
        if prod == 0:
            break
        summands.append(prod)
        n += 1
    return series_coeffs(summands, terms)


def odd_power_products(terms):
    summands = []
    prod = sympy.Integer(1)
    n = 0
    while prod != 0:
        summands.append(prod)
        n += 1
        prod = truncate(prod * (1 - (1 - x) ** (2 * n - 1)), terms)
    return series_coeffs(summands, terms)


def brute_row_fishburn(size):
    count = 0
    for k in range(1, size + 1):
        cells = [(i, j) for i in range(k) for j in range(i, k)]
        for ones in itertools.combinations(cells, size):
            rows = {i for i, _ in ones}
            if len(rows) == k:
                count += 1
    return count


def write(path, name, description, values):
    with open(path, "w") as fh:
        fh.write(f"# {name}: {description}\n")
        fh.write("# generated by scripts/gen_fixtures.py (local computation, not an OEIS download)\n")
        fh.write("# format: n value\n")
        for n, v in enumerate(values):
            if n >= 1:
                fh.write(f"{n} {v}\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=30)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data" / "oeis"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    r = primitive_row_fishburn(args.terms)
    for m in range(1, 7):
        b = brute_row_fishburn(m)
        if b != r[m]:
            raise SystemExit(f"brute force disagrees at m={m}: {b} vs {r[m]}")
    write(out / "A179525.txt", "A179525", "primitive row-Fishburn matrices by size", r)

    q = odd_power_products(args.terms)
    write(out / "A158691.txt", "A158691", "coefficients of sum_n prod_{i=1}^n (1-(1-x)^(2i-1))", q)


if __name__ == "__main__":
    main()
