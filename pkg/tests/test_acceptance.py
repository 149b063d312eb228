"""End-to-end acceptance sweep.

Ten numbered criteria, each a separate test that prints one [PASS]/[FAIL]
line (visible with -s; the test name mirrors the criterion either way).
Every comparison is exact rational arithmetic, zero tolerance; the two
long-running criteria also assert their wall-clock budgets.
"""

import time
from fractions import Fraction as F

import symcap.capacities as cap
import symcap.domains as dom
from symcap.capacities import (
    ck,
    ck_ball,
    ck_concave_toric,
    ck_concave_via_weights,
    ck_convex_toric,
    ck_convex_via_weights,
    ck_polydisk,
    ellipsoid_spectrum,
)
from symcap.obstructions import asymptotic_ratio, check_embedding, scaling_lower_bound
from symcap.weights import weight_expansion

PENT = dom.convex_toric([(0, 0), (2, 0), (2, 1), (1, 2), (0, 2)])
STAIR = dom.concave_toric([(0, 0), (3, 0), (1, 1), (0, 3)])
STAIR2 = dom.concave_toric([(0, 0), (4, 0), (2, 1), (1, 2), (0, 4)])


def _report(num, label, body):
    try:
        body()
    except BaseException:
        print(f"[FAIL] {num:2d}. {label}")
        raise
    print(f"[PASS] {num:2d}. {label}")


def _ball_d(k):
    d = 0
    while not (d * d + d <= 2 * k <= d * d + 3 * d):
        d += 1
    return d


def test_criterion_01_ball_sequence_and_path_optimizer():
    def body():
        t0 = time.monotonic()
        oracle = [_ball_d(k) for k in range(31)]
        assert oracle[:11] == [0, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4]
        for k in range(31):
            assert ck_ball(1, k).value == oracle[k]
            assert ck_convex_toric(dom.ball(1), k).value == oracle[k]
        assert time.monotonic() - t0 < 60

    _report(1, "ball capacity sequence, closed form and path search, k <= 30",
            body)


def test_criterion_02_ellipsoid_triple_oracle():
    def body():
        frozen = {
            (1, F(2)): [0, 1, 2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 6],
            (1, F(3, 2)): [0, 1, F(3, 2), 2, F(5, 2), 3, 3, F(7, 2), 4, 4,
                           F(9, 2), F(9, 2), 5],
        }
        for (a, b), want in frozen.items():
            d = dom.ellipsoid(a, b)
            sp = ellipsoid_spectrum(a, b, 12)
            for k in range(13):
                assert ck_convex_toric(d, k).value == want[k]
                assert ck_concave_toric(d, k).value == want[k]
                assert sp[k].action == want[k]

    _report(2, "three independent ellipsoid formulas agree, k <= 12", body)


def test_criterion_03_weight_expansions():
    def body():
        assert weight_expansion(dom.ellipsoid(1, 2)) == (1, 1)
        assert weight_expansion(dom.ellipsoid(1, F(3, 2))) == (1, F(1, 2), F(1, 2))
        corpus = [
            dom.ball(1),
            dom.ellipsoid(1, 2),
            dom.ellipsoid(1, F(3, 2)),
            dom.ellipsoid(1, F(5, 2)),
            dom.ellipsoid(1, 3),
            STAIR,
            STAIR2,
        ]
        assert len(corpus) >= 6
        for omega in corpus:
            ws = weight_expansion(omega)
            assert sum(w * w for w in ws) / 2 == dom.volume(omega)

    _report(3, "weight expansions with exact volume identity", body)


def test_criterion_04_concave_cross_check():
    def body():
        for x in (1, F(3, 2), 2, F(5, 2), 3):
            d = dom.ellipsoid(1, x)
            for k in range(13):
                assert ck_concave_via_weights(d, k).value == \
                    ck_concave_toric(d, k).value

    _report(4, "concave domains: weights + union DP equals path optimum", body)


def test_criterion_05_convex_cross_check():
    def body():
        for d in (dom.polydisk(1, 1), dom.polydisk(1, 2), PENT):
            for k in range(11):
                assert ck_convex_via_weights(d, k, l_max=100).value == \
                    ck_convex_toric(d, k).value

    _report(5, "convex domains: shifted-ball difference equals path optimum",
            body)


def test_criterion_06_polydisk_closed_form():
    def body():
        for a, b in ((1, 1), (1, 2)):
            for k in range(13):
                assert ck_polydisk(a, b, k).value == \
                    ck_convex_toric(dom.polydisk(a, b), k).value

    _report(6, "polydisk closed form equals path formula, k <= 12", body)


def test_criterion_07_closed_manifolds():
    def body():
        for k in range(51):
            assert ck(dom.cp2(1), k).value == ck_ball(1, k).value
            assert ck(dom.s2xs2(1, 1), k).value == ck_polydisk(1, 1, k).value

    _report(7, "closed manifold capacities match their open models, k <= 50",
            body)


def test_criterion_08_axiom_suite():
    def body():
        corpus = [
            dom.ball(1),
            dom.ball(2),
            dom.ellipsoid(1, 2),
            dom.ellipsoid(1, F(3, 2)),
            dom.polydisk(1, 1),
            dom.polydisk(1, 2),
            PENT,
            dom.disjoint_union(dom.ellipsoid(1, 2), dom.ball(1)),
        ]
        for d in corpus:
            vals = [ck(d, k).value for k in range(21)]
            # increasing, starting 0 < c_1
            assert vals[0] == 0 and vals[1] > 0
            assert all(vals[k] <= vals[k + 1] for k in range(20))
            # conformality: scaling the moment data by mu scales c_k by mu
            for mu in (2, F(5, 2)):
                scaled = dom.scale_domain(d, mu)
                for k in range(11):
                    assert ck(scaled, k).value == mu * vals[k]
            # sublinearity
            for k in range(11):
                for l in range(11):
                    assert vals[k + l] <= vals[k] + vals[l]
        # union formula against brute-force compositions
        e12, b1 = dom.ellipsoid(1, 2), dom.ball(1)
        u = dom.disjoint_union(e12, b1)
        for k in range(11):
            brute = max(ck(e12, t).value + ck(b1, k - t).value
                        for t in range(k + 1))
            assert ck(u, k).value == brute

    _report(8, "axioms: increasing, conformality, sublinearity, union", body)


def test_criterion_09_obstruction_demos():
    def body():
        two = dom.disjoint_union(dom.ball(1), dom.ball(1))
        for c in (F(3, 2), F(9, 5), F(199, 100)):
            rep = check_embedding(two, dom.ball(c), 10)
            assert rep.obstructed and rep.first_k == 2
        rep = check_embedding(two, dom.ball(2), 50)
        assert not rep.obstructed
        assert scaling_lower_bound(dom.ellipsoid(1, 2), dom.ball(1), 50) == 2

    _report(9, "two-ball packing obstruction and exact scaling bound", body)


def test_criterion_10_asymptotics():
    def body():
        t0 = time.monotonic()
        for d in range(10, 101):
            k = (d * d + 3 * d) // 2
            rep = asymptotic_ratio(dom.ball(1), k)
            assert rep.value == d
            assert rep.residual_high <= 2
        # E(1,3): 0.9 <= c_k / (2 sqrt(vol k)) <= 1.1 for 10^3 <= k <= 10^4,
        # squared to stay in exact arithmetic: 4 vol = 6 here
        sp = ellipsoid_spectrum(1, 3, 10000)
        for k in range(1000, 10001):
            c = sp[k].action
            assert 486 * k <= 100 * c * c <= 726 * k
        assert time.monotonic() - t0 < 300

    _report(10, "square-root growth with bounded fourth-root residuals", body)
