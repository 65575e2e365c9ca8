"""Symmetric powers of free modules in monomial coordinates.

A degree-n element is a map from exponent tuples (summing to n) to
scalars.  Pure tensors enter through mu / collapse as products of linear
forms, so the commutativity diagrams hold by construction and are also
re-checked numerically in the test suite.
"""

from .errors import NotProportional, ShapeMismatch, ZeroDenominator


class FreeModule:
    """A finitely generated free module with a named, ordered basis."""

    def __init__(self, names):
        if not names:
            raise ValueError("need at least one basis element")
        self.names = tuple(names)
        self.rank = len(self.names)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.names == other.names

    def __repr__(self):
        return "FreeModule(%r)" % (self.names,)


def direct_sum(modules):
    names = []
    for i, m in enumerate(modules):
        names.extend("%d:%s" % (i, n) for n in m.names)
    return FreeModule(names)


class SymTensor:
    """Element of Sym^degree of a free module, as a monomial-coefficient map."""

    def __init__(self, module, degree, coeffs):
        self.module = module
        self.degree = degree
        self.coeffs = {e: c for e, c in coeffs.items() if not c.is_zero()}
        for e in self.coeffs:
            if len(e) != module.rank or sum(e) != degree:
                raise ShapeMismatch("bad exponent %r for degree %d" % (e, degree))

    @classmethod
    def zero(cls, module, degree):
        return cls(module, degree, {})

    def _check(self, other):
        if self.module != other.module or self.degree != other.degree:
            raise ShapeMismatch("incompatible symmetric tensors")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return SymTensor(self.module, self.degree, out)

    def __neg__(self):
        return SymTensor(self.module, self.degree,
                         {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        return SymTensor(self.module, self.degree,
                         {e: c * scalar for e, c in self.coeffs.items()})

    def __mul__(self, other):
        if self.module != other.module:
            raise ShapeMismatch("products need a common module")
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                out[e] = out[e] + c if e in out else c
        return SymTensor(self.module, self.degree + other.degree, out)

    def is_zero(self):
        return not self.coeffs

    def agreement(self, other):
        """Smallest certified coefficient-wise agreement."""
        self._check(other)
        zero = None
        margin = None
        for e in set(self.coeffs) | set(other.coeffs):
            a = self.coeffs.get(e)
            b = other.coeffs.get(e)
            if a is None:
                a = b.scale_int(0)
            if b is None:
                b = a.scale_int(0)
            m = a.agreement(b)
            margin = m if margin is None else min(margin, m)
        if margin is None:
            from .padic import INF

            return INF
        return margin

    def leading(self):
        """(exponent, coefficient) under graded lexicographic order."""
        if self.is_zero():
            raise ZeroDenominator("zero tensor has no leading coefficient")
        e = max(self.coeffs)
        return e, self.coeffs[e]

    def __repr__(self):
        return "SymTensor(deg=%d, %d terms)" % (self.degree, len(self.coeffs))


def linear_form(module, vector):
    """Degree-1 element with the given coordinate vector."""
    if len(vector) != module.rank:
        raise ShapeMismatch("vector length != module rank")
    coeffs = {}
    for i, c in enumerate(vector):
        e = tuple(1 if j == i else 0 for j in range(module.rank))
        coeffs[e] = c
    return SymTensor(module, 1, coeffs)


def mu(modules, terms):
    """Canonical map from a tensor product into Sym^n of the direct sum.

    `terms` is a list of (scalar, [vector per module]); each pure tensor
    maps to the product of the disjoint linear forms of its factors.
    """
    total = direct_sum(modules)
    n = len(modules)
    out = SymTensor.zero(total, n)
    offsets = []
    off = 0
    for m in modules:
        offsets.append(off)
        off += m.rank
    for scalar, vectors in terms:
        prod = None
        for k, (m, vec) in enumerate(zip(modules, vectors)):
            padded = [scalar.scale_int(0)] * total.rank
            for i, c in enumerate(vec):
                padded[offsets[k] + i] = c
            form = linear_form(total, padded)
            prod = form if prod is None else prod * form
        out = out + prod.scale(scalar)
    return out


def collapse(module, terms):
    """Projection of M^{tensor n} onto Sym^n(M): forget tensor positions."""
    n = None
    out = None
    for scalar, vectors in terms:
        if n is None:
            n = len(vectors)
            out = SymTensor.zero(module, n)
        prod = None
        for vec in vectors:
            form = linear_form(module, list(vec))
            prod = form if prod is None else prod * form
        out = out + prod.scale(scalar)
    if out is None:
        raise ValueError("collapse needs at least one term")
    return out


def sqrt_ratio(x, y, floor=1):
    """The scalar a with x = a*y, certified coefficient-wise.

    The candidate is the ratio of graded-lex leading coefficients; its
    square is the proportionality constant between x*x and y*y.
    """
    x._check(y)
    if y.is_zero():
        raise ZeroDenominator("cannot divide by the zero tensor")
    if x.is_zero():
        ey, cy = y.leading()
        return cy.scale_int(0)
    ex, cx = x.leading()
    ey, cy = y.leading()
    if ex != ey:
        raise NotProportional("leading monomials differ")
    a = cx / cy
    if x.agreement(y.scale(a)) < floor:
        raise NotProportional("coefficient-wise certification failed")
    # squaring oracle: x^2 and (a^2) y^2 must also agree
    if (x * x).agreement((y * y).scale(a * a)) < floor:
        raise NotProportional("squares diverge")
    return a
