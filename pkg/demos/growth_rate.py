"""How fast do capacities grow?  Like 2*sqrt(vol * k), with a slow tail."""

from fractions import Fraction

from symcap import asymptotic_ratio, ball, ellipsoid


def row(domain, label, k):
    rep = asymptotic_ratio(domain, k)
    model = (rep.model_low + rep.model_high) / 2
    print(f"  {label:>8} k={k:>6}  c_k={str(rep.value):>6}  "
          f"model~{float(model):9.3f}  residual/k^(1/4) <= {float(rep.residual_high):.4f}")


def main():
    print("unit ball at the jump indices k = (d^2+3d)/2:")
    for d in (10, 20, 40, 80, 100):
        row(ball(1), "B(1)", (d * d + 3 * d) // 2)
    print()
    print("E(1,3) along powers of ten:")
    for k in (10, 100, 1000, 10000):
        row(ellipsoid(1, 3), "E(1,3)", k)
    print()
    print("the residual column stays bounded; the model error is O(k^(1/4)),")
    print("so the normalized residual does not drift upward with k.")


if __name__ == "__main__":
    main()
