"""Three roads to the same ellipsoid capacities.

An ellipsoid E(a,b) is simultaneously a convex and a concave toric
domain, and its capacity sequence is also the sorted multiset
{m*a + n*b}.  Running all three computations side by side is the
strongest internal consistency check the library has.
"""

from fractions import Fraction

from symcap import (
    ck_concave_toric,
    ck_convex_toric,
    ellipsoid,
    ellipsoid_spectrum,
)


def table(a, b, kmax):
    d = ellipsoid(a, b)
    sp = ellipsoid_spectrum(a, b, kmax)
    print(f"E({a},{b})")
    print(f"  {'k':>3} {'convex':>8} {'concave':>8} {'spectrum':>9}  (m,n)")
    for k in range(kmax + 1):
        cv = ck_convex_toric(d, k).value
        cc = ck_concave_toric(d, k).value
        e = sp[k]
        mark = "" if cv == cc == e.action else "   <-- MISMATCH"
        print(f"  {k:>3} {str(cv):>8} {str(cc):>8} {str(e.action):>9}  "
              f"({e.m},{e.n}){mark}")
    print()


def main():
    table(1, 2, 12)
    table(1, Fraction(3, 2), 12)


if __name__ == "__main__":
    main()
