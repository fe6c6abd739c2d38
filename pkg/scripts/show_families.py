#!/usr/bin/env python3
"""Print small instances of every number family and the first Bell
polynomials, as a quick visual sanity check."""

from fractions import Fraction

from centralfact.bell import central_bell_poly, r_central_bell_poly
from centralfact.central import Family, triangle
from centralfact.first_kind import triangle as first_kind_triangle

NMAX = 8


def print_table(table, title):
    print(f"\n{title}")
    for n in range(table.nmax + 1):
        print(f"  n={n:2d}  " + "  ".join(str(v) for v in table.row(n)))


def poly_str(p):
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeff(k)
        if c == 0:
            continue
        coeff = "" if c == 1 and k > 0 else f"{c}"
        if k == 0:
            parts.append(f"{c}")
        elif k == 1:
            parts.append(f"{coeff}x" if coeff else "x")
        else:
            parts.append(f"{coeff}x^{k}" if coeff else f"x^{k}")
    return " + ".join(parts) if parts else "0"


def main() -> None:
    half = Fraction(1, 2)
    print_table(triangle(Family.SECOND, NMAX), "T(n, k), second kind")
    print_table(triangle(Family.R_SECOND, NMAX, 1), "T_1(n+1, k+1), r = 1")
    print_table(first_kind_triangle(Family.FIRST, NMAX), "t(n, k), first kind")
    print_table(
        first_kind_triangle(Family.R_FIRST, NMAX, half, "recurrence"),
        "t_{1/2}(n+1/2, k+1/2) via the recurrence",
    )
    print_table(triangle(Family.STIRLING2, NMAX), "S2(n, k)")
    print_table(triangle(Family.R_STIRLING1, NMAX, 1), "S_{1,1}(n+1, k+1)")

    print("\ncentral Bell polynomials")
    for n in range(6):
        print(f"  B_{n}(x) = {poly_str(central_bell_poly(n))}")
    print("\nr-extended central Bell polynomials, r = 1")
    for n in range(6):
        print(f"  B_{n}(x; 1) = {poly_str(r_central_bell_poly(n, 1))}")


if __name__ == "__main__":
    main()
