"""Truncated completed group algebras and their augmentation filtration.

Elements of Z_p[Q][[t_1..t_s]] are truncated at a total degree, with a sticky
flag that refuses to certify a leading term once information has been
dropped.  The involution [g] -> [g^{-1}] acts on degree-n graded pieces by
(-1)^n together with inversion on the finite quotient.
"""

from plectic.grpalg import (
    GroupAlgebraElem,
    GroupShape,
    check_lemma_free_graded_injectivity,
)
from plectic.padic import PadicScalar

P, N = 5, 20
shape = GroupShape((2,), 2, 6, P, N)  # Q = Z/2, free rank 2, degree cap 6
one = GroupAlgebraElem.one(shape)

g = GroupAlgebraElem.group_elem(shape, None, (1, 0))
h = GroupAlgebraElem.group_elem(shape, None, (0, 1))
print("[g] as a power series in t1:", sorted(g.coeffs))
print("([g]-1)([h]-1) lives in filtration degree:",
      ((g - one) * (h - one)).rel_aug_degree())

inv = g.involution()
print("\ninvolution of [g] (geometric series in t1):")
for key in sorted(inv.coeffs):
    print("  ", key, "->", inv.coeffs[key])

x = (g - one) * (h - one)
lt = x.leading_term(2)
print("\nleading term of ([g]-1)([h]-1) in I^2/I^3:", sorted(lt.coeffs))
print("involution acts by (-1)^2 on the class:",
      x.involution().leading_term(2).agreement(lt.dual()), "digits")

# walking past the truncation degree poisons leading terms, loudly
high = g - one
for _ in range(shape.degree):
    high = high * (g - one)
print("\npower past the cap is flagged lossy:", high.lost)

print("\ninjectivity certificates (full column rank of the graded map):")
for divisors, s, n in (((2,), 2, 2), ((2, 2), 2, 3), ((2, 2), 4, 4)):
    sh = GroupShape(divisors, s, n + 2, P, N)
    print("  Q=%r s=%d degree=%d -> rank %d"
          % (divisors, s, n, check_lemma_free_graded_injectivity(sh, n)))
