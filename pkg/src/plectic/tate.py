"""Tate curves E_q over Q_p and the uniformization E^x -> E_q(E_p).

The curve is y^2 + xy = x^3 + a4*x + a6 with a4, a6 given by the classical
q-series; points over the quadratic extension come from the bi-periodic
X, Y series evaluated on the fundamental annulus v(q) > v(u) >= 0.
"""

from .errors import NotMultiplicativeReduction, PrecisionExhausted
from .padic import INF, PadicScalar, QuadExtScalar


def _series_s(q, k):
    """s_k(q) = sum_{n>=1} n^k q^n / (1 - q^n), truncated below precision."""
    p = q.p
    total = PadicScalar.zero(p, q.prec)
    one = PadicScalar.one(p, INF)
    qn = q
    n = 1
    while not qn.is_zero() and n * q.v <= q.prec:
        total = total + qn.scale_int(n ** k) / (one - qn)
        qn = qn * q
        n += 1
    return total


def tate_coefficients(q):
    """(a4, a6) of the Tate curve with period q."""
    if q.is_zero() or q.v < 1:
        raise NotMultiplicativeReduction("Tate period needs valuation >= 1")
    s3 = _series_s(q, 3)
    s5 = _series_s(q, 5)
    a4 = -(s3.scale_int(5))
    a6 = -(s3.scale_int(5) + s5.scale_int(7)) / PadicScalar.from_int(12, q.p, INF)
    return a4, a6


def j_invariant(q):
    """j(q) = c4^3 / Delta computed from the Tate coefficients."""
    a4, a6 = tate_coefficients(q)
    one = PadicScalar.one(q.p, INF)
    c4 = one - a4.scale_int(48)
    c6 = -one + a4.scale_int(72) - a6.scale_int(864)
    delta = (c4 ** 3 - c6 ** 2) / PadicScalar.from_int(1728, q.p, INF)
    return c4 ** 3 / delta


def tate_period_from_j(j):
    """Invert the j-series by fixed-point iteration; needs v(j) < 0."""
    if j.is_zero() or j.v >= 0:
        raise NotMultiplicativeReduction("multiplicative reduction needs v(j) < 0")
    one = PadicScalar.one(j.p, INF)
    q = one / j
    for _ in range(int(j.prec - j.v) + 2):
        head = j_invariant(q) - one / q  # the integral part 744 + 196884q + ...
        q_next = one / (j - head)
        if q_next.agreement(q) >= q.prec:
            return q_next
        q = q_next
    return q


class CurvePoint:
    """A point on the Tate model, either infinity or an (x, y) pair."""

    __slots__ = ("x", "y")

    def __init__(self, x=None, y=None):
        self.x = x
        self.y = y

    @classmethod
    def infinity(cls):
        return cls()

    def is_infinity(self):
        return self.x is None

    def agreement(self, other):
        if self.is_infinity() or other.is_infinity():
            return INF if self.is_infinity() and other.is_infinity() else -INF
        return min(self.x.agreement(other.x), self.y.agreement(other.y))

    def __repr__(self):
        if self.is_infinity():
            return "CurvePoint(infinity)"
        return "CurvePoint(%r, %r)" % (self.x, self.y)


class TateCurve:
    """E_q with its uniformization data and chord-tangent arithmetic."""

    def __init__(self, q, reduction_sign=1):
        if reduction_sign not in (1, -1):
            raise ValueError("reduction sign must be +1 or -1")
        self.q = q
        self.reduction_sign = reduction_sign
        self.a4, self.a6 = tate_coefficients(q)
        self.p = q.p

    def on_curve_margin(self, pt):
        """Certified agreement of the curve equation at pt."""
        if pt.is_infinity():
            return INF
        x, y = pt.x, pt.y
        a4 = QuadExtScalar.from_base(self.a4, x.c)
        a6 = QuadExtScalar.from_base(self.a6, x.c)
        lhs = y * y + x * y
        rhs = x * x * x + a4 * x + a6
        return lhs.agreement(rhs)

    # -- uniformization ------------------------------------------------------

    def reduce_to_annulus(self, u):
        """Multiply by a power of q so that 0 <= v(u) < v(q)."""
        if u.is_zero():
            raise PrecisionExhausted("zero has no image on the curve")
        k = u.valuation // self.q.v
        if k == 0:
            return u
        qk = QuadExtScalar.from_base(self.q, u.c) ** k
        return u / qk

    def phi(self, u):
        """The uniformization map; q^Z maps to the origin."""
        u = self.reduce_to_annulus(u)
        one = QuadExtScalar.from_parts(1, 0, self.p, INF, u.c)
        if u.valuation == 0 and (u - one).is_zero():
            return CurvePoint.infinity()
        q_ext = QuadExtScalar.from_base(self.q, u.c)
        s1 = _series_s(self.q, 1)
        x = _x_term(u)
        y = _y_term(u)
        qn = q_ext
        n = 1
        bound = u.prec
        while n * self.q.v <= bound:
            w, t = qn * u, qn * u.inverse()
            # x-terms are symmetric under w -> 1/w; y-terms pick up -t/(1-t)^3
            x = x + _x_term(w) + _x_term(t)
            y = y + _y_term(w) - _neg_y_term(t)
            qn = qn * q_ext
            n += 1
        x = x - QuadExtScalar.from_base(s1 + s1, u.c)
        y = y + QuadExtScalar.from_base(s1, u.c)
        return CurvePoint(x, y)

    # -- group law -------------------------------------------------------------

    def negate(self, pt):
        if pt.is_infinity():
            return pt
        return CurvePoint(pt.x, -pt.y - pt.x)

    def add(self, P, Q):
        """Chord-tangent law on y^2 + xy = x^3 + a4 x + a6."""
        if P.is_infinity():
            return Q
        if Q.is_infinity():
            return P
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        c = x1.c
        a4 = QuadExtScalar.from_base(self.a4, c)
        one = QuadExtScalar.from_parts(1, 0, self.p, INF, c)
        if (x1 - x2).is_zero():
            if (y1 + y2 + x2).is_zero():
                return CurvePoint.infinity()
            # tangent slope
            num = x1 * x1 * QuadExtScalar.from_parts(3, 0, self.p, INF, c) + a4 - y1
            den = y1 + y1 + x1
            if den.is_zero():
                raise PrecisionExhausted("tangent denominator vanishes to precision")
            lam = num / den
        else:
            lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
        x3 = lam * lam + lam - x1 - x2
        y3 = -(lam + one) * x3 - nu
        return CurvePoint(x3, y3)

    def multiply(self, n, P):
        if n < 0:
            return self.multiply(-n, self.negate(P))
        out = CurvePoint.infinity()
        while n:
            if n & 1:
                out = self.add(out, P)
            P = self.add(P, P)
            n >>= 1
        return out

    def sigma(self, pt):
        """Frobenius applied coordinate-wise (the action on E_q points)."""
        if pt.is_infinity():
            return pt
        return CurvePoint(pt.x.frobenius(), pt.y.frobenius())


def _x_term(w):
    one = QuadExtScalar.from_parts(1, 0, w.p, INF, w.c)
    d = one - w
    return w / (d * d)


def _y_term(w):
    one = QuadExtScalar.from_parts(1, 0, w.p, INF, w.c)
    d = one - w
    return (w * w) / (d * d * d)


def _neg_y_term(t):
    one = QuadExtScalar.from_parts(1, 0, t.p, INF, t.c)
    d = one - t
    return t / (d * d * d)
