"""Exception hierarchy for the verification toolkit."""


class PlecticError(Exception):
    """Base class for all toolkit errors."""


class DivisionByZero(PlecticError):
    pass


class PrecisionExhausted(PlecticError):
    """An operation cannot certify a single digit of its result."""


class NotAUnit(PlecticError):
    pass


class NotPrincipalUnit(PlecticError):
    pass


class OutsideConvergenceDomain(PlecticError):
    pass


class NotMultiplicativeReduction(PlecticError):
    pass


class ShapeMismatch(PlecticError):
    pass


class DegreeTooLow(PlecticError):
    pass


class RankDeficient(PlecticError):
    pass


class NotProportional(PlecticError):
    pass


class ZeroDenominator(PlecticError):
    pass


class NotInImage(PlecticError):
    pass


class InconsistentSigns(PlecticError):
    """A scenario contradicts the sign constraints; not a code error."""


class IdentityFails(PlecticError):
    """A verified identity diverges; carries the first bad coefficient."""


class CharacterTableDegenerate(PlecticError):
    pass


class ParseError(PlecticError):
    pass


class ValidationError(PlecticError):
    pass
