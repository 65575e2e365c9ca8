"""Tate curves: series coefficients against rational oracles, group law,
uniformization, and period recovery."""

import random
from fractions import Fraction

import pytest

from plectic.errors import NotMultiplicativeReduction
from plectic.padic import INF, PadicScalar, QuadExtScalar, smallest_nonsquare
from plectic.tate import (
    CurvePoint,
    TateCurve,
    j_invariant,
    tate_coefficients,
    tate_period_from_j,
)

P = 5
N = 40
C = smallest_nonsquare(P)
Q = PadicScalar(P, 1, 1, N)
CURVE = TateCurve(Q)
ONE = QuadExtScalar.from_parts(1, 0, P, N, C)


def rand_unit(rng, max_shift=2):
    while True:
        u = QuadExtScalar.from_parts(rng.randrange(P ** N), rng.randrange(P ** N),
                                     P, N, C)
        if u.valuation == 0 and (u - ONE).valuation <= max_shift:
            return u


# -- series oracles ------------------------------------------------------------

def _sigma_series(k, terms):
    """Coefficients of s_k(q) = sum_m sigma_k(m) q^m in exact rationals."""
    out = [Fraction(0)]
    for m in range(1, terms):
        out.append(Fraction(sum(d ** k for d in range(1, m + 1) if m % d == 0)))
    return out


def _eval_at_q(coeffs, prec):
    total = Fraction(0)
    for i, c in enumerate(coeffs):
        total += c * P ** i
    return PadicScalar.from_fraction(total, P, prec)


def test_tate_coefficients_match_divisor_sum_oracle():
    terms = 14
    s3 = _sigma_series(3, terms)
    s5 = _sigma_series(5, terms)
    a4_oracle = _eval_at_q([-5 * x for x in s3], terms)
    a6_oracle = _eval_at_q([-(5 * s3[i] + 7 * s5[i]) / 12 for i in range(terms)],
                           terms)
    a4, a6 = tate_coefficients(Q)
    assert a4.agreement(a4_oracle) >= terms - 1
    assert a6.agreement(a6_oracle) >= terms - 1


def test_a4_leading_term():
    a4, _ = tate_coefficients(Q)
    assert a4.agreement(PadicScalar.from_int(-5 * 5, P, 3)) >= 3


def test_j_series_classical_coefficients():
    # q*j(q) = 1 + 744q + 196884q^2 + 21493760q^3 + 864299970q^4 + O(q^5)
    j = j_invariant(Q)
    head = [1, 744, 196884, 21493760, 864299970]
    total = sum(Fraction(c) * P ** i for i, c in enumerate(head))
    diff = j * Q - PadicScalar.from_fraction(total, P, N)
    assert diff.is_zero() or diff.valuation >= 5


def test_j_has_pole_of_period_order():
    assert j_invariant(Q).v == -1
    q2 = PadicScalar(P, 2, 3, N)
    assert j_invariant(q2).v == -2


def test_discriminant_matches_eta_product():
    # Delta = q * prod (1 - q^n)^24, against the c4/c6 combination
    a4, a6 = tate_coefficients(Q)
    one = PadicScalar.one(P, INF)
    c4 = one - a4.scale_int(48)
    c6 = -one + a4.scale_int(72) - a6.scale_int(864)
    delta = (c4 ** 3 - c6 ** 2) / PadicScalar.from_int(1728, P, INF)
    eta = Q
    qn = Q
    n = 1
    while not qn.is_zero() and n <= N:
        eta = eta * (one - qn) ** 24
        qn = qn * Q
        n += 1
    assert delta.agreement(eta) >= N - 1


def test_period_round_trip():
    assert tate_period_from_j(j_invariant(Q)).agreement(Q) >= N
    q2 = PadicScalar(P, 2, 7, N)
    assert tate_period_from_j(j_invariant(q2)).agreement(q2) >= N


def test_good_reduction_rejected():
    with pytest.raises(NotMultiplicativeReduction):
        tate_period_from_j(PadicScalar.from_int(1728, P, N))
    with pytest.raises(NotMultiplicativeReduction):
        tate_coefficients(PadicScalar.from_int(3, P, N))


# -- uniformization ---------------------------------------------------------------

def test_kernel_is_the_period_lattice():
    q_ext = QuadExtScalar.from_base(Q, C)
    for k in range(-2, 3):
        u = q_ext ** k if k else ONE
        assert CURVE.phi(u).is_infinity()


def test_phi_is_a_homomorphism():
    rng = random.Random(41)
    for _ in range(30):
        u, v = rand_unit(rng), rand_unit(rng)
        lhs = CURVE.phi(u * v)
        rhs = CURVE.add(CURVE.phi(u), CURVE.phi(v))
        assert lhs.agreement(rhs) >= N - 8


def test_phi_respects_inverses():
    rng = random.Random(43)
    u = rand_unit(rng)
    p1, p2 = CURVE.phi(u), CURVE.phi(u.inverse())
    assert CURVE.add(p1, p2).is_infinity()
    assert p2.agreement(CURVE.negate(p1)) >= N - 5


def test_phi_squares():
    rng = random.Random(47)
    for _ in range(10):
        u = rand_unit(rng)
        assert CURVE.phi(u * u).agreement(
            CURVE.add(CURVE.phi(u), CURVE.phi(u))) >= N - 8


def test_points_stay_on_curve():
    rng = random.Random(53)
    u, v = rand_unit(rng), rand_unit(rng)
    pu, pv = CURVE.phi(u), CURVE.phi(v)
    for pt in (pu, pv, CURVE.add(pu, pv), CURVE.negate(pu),
               CURVE.multiply(3, pv)):
        assert CURVE.on_curve_margin(pt) >= N - 8


def test_group_law_identity_and_associativity():
    rng = random.Random(59)
    pts = [CURVE.phi(rand_unit(rng)) for _ in range(3)]
    inf = CurvePoint.infinity()
    assert CURVE.add(pts[0], inf).agreement(pts[0]) == INF or \
        CURVE.add(pts[0], inf).agreement(pts[0]) >= N - 5
    a, b, c = pts
    lhs = CURVE.add(CURVE.add(a, b), c)
    rhs = CURVE.add(a, CURVE.add(b, c))
    assert lhs.agreement(rhs) >= N - 8


def test_sigma_on_points():
    rng = random.Random(61)
    u = rand_unit(rng)
    pt = CURVE.phi(u)
    assert CURVE.sigma(CURVE.sigma(pt)).agreement(pt) >= N - 5
    assert CURVE.phi(u.frobenius()).agreement(CURVE.sigma(pt)) >= N - 5
    assert CURVE.sigma(CurvePoint.infinity()).is_infinity()


def test_minus_generator_maps_to_finite_point():
    # the generator of the minus line must survive the parametrization
    g = QuadExtScalar.from_parts(1, P, P, N, C)
    u0 = g / g.frobenius()
    pt = CURVE.phi(u0)
    assert not pt.is_infinity()
    assert CURVE.on_curve_margin(pt) >= N - 8
