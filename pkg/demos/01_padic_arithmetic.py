"""Tour of the interval p-adic scalar layer.

Every value carries (valuation, unit, precision); arithmetic tracks how many
base-p digits remain certified, so an identity that "holds" always holds to
an explicit number of digits.
"""

from plectic.padic import (
    PadicScalar,
    QuadExtScalar,
    padic_sqrt,
    pexp,
    plog,
    quad_teichmuller,
    smallest_nonsquare,
    teichmuller,
)

P, N = 5, 20

x = PadicScalar.from_int(7, P, N)
y = PadicScalar.from_fraction("3/4", P, N)
print("x        =", x)
print("y = 3/4  =", y)
print("x*y      =", x * y)
print("x/y      =", (x / y))
print("agreement of x*y/y with x:", (x * y / y).agreement(x), "digits")

# Teichmuller lifts are the (p-1)-st roots of unity congruent to a digit
t = teichmuller(PadicScalar.from_int(2, P, N))
print("\nteichmuller(2) =", t)
print("its 4th power agrees with 1 to", (t ** 4).agreement(PadicScalar.one(P, N)),
      "digits")

# log and exp (defined on the quadratic extension) invert each other
c = smallest_nonsquare(P)
u = QuadExtScalar.from_base(PadicScalar.from_int(1 + 2 * P, P, N), c)
lg = plog(u)
print("\nplog(1+2p)       =", lg.a)
print("pexp(plog(u)) ~ u to", pexp(lg).agreement(u), "digits")

# square roots exist iff the leading digit is a square mod p
s = padic_sqrt(PadicScalar.from_int(6, P, N))
print("\nsqrt(6) =", s, " square check:", (s * s).agreement(
    PadicScalar.from_int(6, P, N)), "digits")
print("sqrt(2) exists?", padic_sqrt(PadicScalar.from_int(2, P, N)) is not None)

# the unramified quadratic extension: adjoin a root of the smallest nonsquare
w = QuadExtScalar.from_parts(1, 1, P, N, c)
print("\nw = 1 + sqrt(%d):" % c, w)
print("norm(w)  =", w.norm())
print("trace(w) =", w.trace())
print("frobenius fixes the norm:",
      w.frobenius().norm().agreement(w.norm()), "digits")
zeta = quad_teichmuller(w)
order = P * P - 1
print("teichmuller lift has order dividing p^2-1:",
      (zeta ** order).agreement(QuadExtScalar.from_parts(1, 0, P, N, c)),
      "digits")
