"""Coordinates for the torsion-free pro-p completion of the local units.

A nonzero u in the quadratic extension decomposes as p^v * zeta * u1 with
zeta a Teichmuller root of unity and u1 a principal unit.  The completion
coordinates are (v, log u1) with the logarithm written in the eigenbasis
(1, w) of Frobenius, so sigma acts as diag(1, 1, -1) on coordinates and the
eigenspace projections are exact.
"""

from fractions import Fraction

from .errors import NotInImage, PrecisionExhausted
from .padic import (
    INF,
    PadicScalar,
    QuadExtScalar,
    plog,
    quad_teichmuller,
    smallest_nonsquare,
)


class CompletedUnit:
    """Coordinates (valuation, log_a, log_b) of a completed unit."""

    __slots__ = ("val", "log_a", "log_b")

    def __init__(self, val, log_a, log_b):
        self.val = val
        self.log_a = log_a
        self.log_b = log_b

    def coords(self):
        return (self.val, self.log_a, self.log_b)

    def __add__(self, other):
        return CompletedUnit(self.val + other.val, self.log_a + other.log_a,
                             self.log_b + other.log_b)

    def __neg__(self):
        return CompletedUnit(-self.val, -self.log_a, -self.log_b)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return CompletedUnit(self.val * scalar, self.log_a * scalar, self.log_b * scalar)

    def scale_int(self, n):
        return CompletedUnit(self.val.scale_int(n), self.log_a.scale_int(n),
                             self.log_b.scale_int(n))

    def agreement(self, other):
        return min(self.val.agreement(other.val),
                   self.log_a.agreement(other.log_a),
                   self.log_b.agreement(other.log_b))

    def is_zero(self):
        return self.val.is_zero() and self.log_a.is_zero() and self.log_b.is_zero()

    def __repr__(self):
        return "CompletedUnit%r" % (self.coords(),)


class MinusUnit:
    """Coordinate in the pinned generator basis of the minus eigenspace."""

    __slots__ = ("coord",)

    def __init__(self, coord):
        self.coord = coord

    def __add__(self, other):
        return MinusUnit(self.coord + other.coord)

    def __neg__(self):
        return MinusUnit(-self.coord)

    def scale(self, scalar):
        return MinusUnit(self.coord * scalar)

    def is_zero(self):
        return self.coord.is_zero()

    def agreement(self, other):
        return self.coord.agreement(other.coord)

    def __repr__(self):
        return "MinusUnit(%r)" % (self.coord,)


class UnitCompletion:
    """The completion of the units of Q_p(w) at a fixed precision."""

    def __init__(self, p, prec):
        if p < 5 or p % 2 == 0:
            raise ValueError("need an odd prime p >= 5")
        self.p = p
        self.prec = prec
        self.c = smallest_nonsquare(p)
        # minus coordinate of the pinned norm-one generator u0
        self._b0 = plog(self.ext(1, p)).b

    # -- element constructors ----------------------------------------------

    def ext(self, a, b):
        """Build a + b*w from integers or scalars at working precision."""
        return QuadExtScalar.from_parts(a, b, self.p, self.prec, self.c)

    def base(self, n):
        return PadicScalar.from_int(n, self.p, self.prec)

    def zero_scalar(self):
        return PadicScalar.zero(self.p, self.prec)

    # -- the coordinate map -------------------------------------------------

    def complete(self, u):
        """Coordinates of a nonzero unit-group element."""
        if u.is_zero():
            raise PrecisionExhausted("cannot complete zero")
        v = u.valuation
        p_pow = QuadExtScalar.from_base(PadicScalar(self.p, -v, 1, INF), self.c)
        u1 = u * p_pow
        zeta = quad_teichmuller(u1)
        principal = u1 * zeta.inverse()
        l = plog(principal)
        return CompletedUnit(self.base(v), l.a, l.b)

    def sigma(self, c):
        """Frobenius on completion coordinates: diag(1, 1, -1)."""
        return CompletedUnit(c.val, c.log_a, -c.log_b)

    def minus_project(self, c):
        """((1 - sigma)/2)(c) in the generator basis of the minus line."""
        return MinusUnit(c.log_b / (self._b0 + self._b0))

    def minus_embed(self, m):
        """The completed unit with the given minus coordinate."""
        return CompletedUnit(self.zero_scalar(), self.zero_scalar(),
                             m.coord * (self._b0 + self._b0))

    def norm_one_unit(self):
        """u0 = (1 + p*w) / sigma(1 + p*w), the pinned minus generator."""
        g = self.ext(1, self.p)
        return g / g.frobenius()

    def norm_one_generator(self):
        return self.complete(self.norm_one_unit())

    @property
    def minus_scale(self):
        """log_b coordinate of the generator u0 (equals 2 * b0)."""
        return self._b0 + self._b0

    def sigma_matrix(self):
        one = PadicScalar.one(self.p, self.prec)
        zero = self.zero_scalar()
        return [[one, zero, zero], [zero, one, zero], [zero, zero, -one]]


class CompletedPoint:
    """Coordinates (x, y) of a point-group element modulo the period lattice."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x
        self.y = y

    def coords(self):
        return (self.x, self.y)

    def __add__(self, other):
        return CompletedPoint(self.x + other.x, self.y + other.y)

    def __neg__(self):
        return CompletedPoint(-self.x, -self.y)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return CompletedPoint(self.x * scalar, self.y * scalar)

    def scale_int(self, n):
        return CompletedPoint(self.x.scale_int(n), self.y.scale_int(n))

    def agreement(self, other):
        return min(self.x.agreement(other.x), self.y.agreement(other.y))

    def is_zero(self):
        return self.x.is_zero() and self.y.is_zero()

    def __repr__(self):
        return "CompletedPoint(%r, %r)" % (self.x, self.y)


class PointCompletion:
    """Completion of the point group of a period-q torus over Q_p(w).

    Coordinates of a unit u are obtained from its unit-completion
    coordinates (v, a, b) by killing the period: (a - (v/v_q)*a_q, b).
    The valuation of q must be prime to p so v/v_q lands in Z_p.
    """

    def __init__(self, units, q, reduction_sign=1):
        if q.is_zero() or q.v < 1:
            raise ValueError("period must have valuation >= 1")
        if q.v % units.p == 0:
            raise ValueError("period valuation must be prime to p")
        if reduction_sign not in (1, -1):
            raise ValueError("reduction sign must be +1 or -1")
        self.units = units
        self.q = q
        self.reduction_sign = reduction_sign
        self._vq_inv = PadicScalar.from_fraction(Fraction(1, q.v), units.p, units.prec)
        q_ext = QuadExtScalar.from_base(q, units.c)
        self._alpha_q = units.complete(q_ext).log_a

    def complete(self, u):
        c = self.units.complete(u)
        t = c.val * self._vq_inv
        return CompletedPoint(c.log_a - t * self._alpha_q, c.log_b)

    def sigma(self, pt):
        """Partial Frobenius on point coordinates: diag(a, -a)."""
        a = self.reduction_sign
        return CompletedPoint(pt.x.scale_int(a), pt.y.scale_int(-a))

    def from_minus(self, m):
        """Image of a minus-eigenspace unit under the parametrization."""
        return CompletedPoint(self.units.zero_scalar(),
                              m.coord * self.units.minus_scale)

    def to_minus(self, pt):
        """Invert from_minus; the x-coordinate must vanish to precision."""
        if not pt.x.is_zero():
            raise NotInImage("point has a nonzero plus coordinate")
        return MinusUnit(pt.y / self.units.minus_scale)
