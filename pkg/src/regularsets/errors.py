"""Exception hierarchy shared by every module in the package."""


class RegularSetsError(ValueError):
    """Base class for all errors raised by :mod:`regularsets`."""


# group construction / lookup

class NoIdentity(RegularSetsError):
    pass


class NotLatinSquare(RegularSetsError):
    pass


class MissingInverse(RegularSetsError):
    pass


class NotAssociative(RegularSetsError):
    def __init__(self, triple: tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")
        self.triple = triple


class UnknownFamily(RegularSetsError):
    pass


class ParamOutOfRange(RegularSetsError):
    pass


class IndexOutOfRange(RegularSetsError):
    pass


class NotClosed(RegularSetsError):
    def __init__(self, pair: tuple[int, int], message: str):
        super().__init__(message)
        self.pair = pair


class MissingIdentity(RegularSetsError):
    pass


class OrderBoundExceeded(RegularSetsError):
    pass


# subgroup shape

class NotNormal(RegularSetsError):
    def __init__(self, g: int, h: int, conjugate: int):
        super().__init__(
            f"subgroup is not normal: g*h*g^-1 = {conjugate} lies outside H "
            f"for g={g}, h={h}"
        )
        self.g, self.h, self.conjugate = g, h, conjugate


class TrivialOrFull(RegularSetsError):
    pass


# parameters

class ParameterViolation(RegularSetsError):
    """A (kappa, tau) pair breaks one of the admissibility clauses."""


class KappaOutOfRange(ParameterViolation):
    pass


class TauOutOfRange(ParameterViolation):
    pass


class GcdViolation(ParameterViolation):
    pass


class TauOdd(ParameterViolation):
    pass


class TauEven(ParameterViolation):
    pass


# witnesses / oracle

class YIntersectsH(RegularSetsError):
    pass


class NotAConnectionSet(RegularSetsError):
    pass


class NotAWitness(RegularSetsError):
    pass


class SearchSpaceTooLarge(RegularSetsError):
    pass


class BudgetExhausted(RegularSetsError):
    """The search budget ran out; the verdict is unknown, not negative."""


class InternalDefect(RuntimeError):
    """A construction produced output the oracle rejects. Always a bug."""
