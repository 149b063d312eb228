"""Two unit balls into one bigger ball: where the volume bound lies.

By volume alone, B(1) u B(1) fits in B(c) as soon as c^2/2 >= 1, i.e.
c >= sqrt(2) ~ 1.414.  The capacity sequence says otherwise: the second
capacity of the union is 2, so no embedding exists for any c < 2.  This
script sweeps c upward and shows the obstruction sitting at k = 2 until
it disappears exactly at c = 2.
"""

from fractions import Fraction

from symcap import ball, check_embedding, ck, disjoint_union, scaling_lower_bound

TWO_BALLS = disjoint_union(ball(1), ball(1))


def volume_bound_ok(c):
    return Fraction(c) ** 2 / 2 >= 1


def main():
    print("union capacities:", [str(ck(TWO_BALLS, k).value) for k in range(8)])
    print()
    for c in (Fraction(3, 2), Fraction(9, 5), Fraction(199, 100), Fraction(2)):
        rep = check_embedding(TWO_BALLS, ball(c), 50)
        vol = "ok" if volume_bound_ok(c) else "too small"
        if rep.obstructed:
            print(f"c = {c}: volume {vol}; obstructed at k={rep.first_k} "
                  f"({rep.c_source} > {rep.c_target})")
        else:
            print(f"c = {c}: volume {vol}; no obstruction up to k={rep.k_max}")
    print()
    print("the ball-to-ball packing bound from capacities alone:")
    lam2 = scaling_lower_bound(TWO_BALLS, ball(1), 50)
    print(f"  any target ball must satisfy a >= {lam2}  (volume only gives sqrt(2))")


if __name__ == "__main__":
    main()
