"""Exception types shared across the package."""


class Wes6Error(Exception):
    """Base class for all package errors."""


class ShapeMismatch(Wes6Error):
    """Matrix or homomorphism shapes are incompatible."""


class NotWellDefined(Wes6Error):
    """A matrix does not define a homomorphism between the given groups."""


class UnsupportedRank(Wes6Error):
    """Automorphism enumeration requested for a group of free rank >= 2."""


class BudgetExceeded(Wes6Error):
    """An enumeration would exceed the caller's candidate budget."""


class HypothesisViolation(Wes6Error):
    """Input data violates the odd-torsion hypothesis on H3."""


class NotAutomorphism(Wes6Error):
    """A map required to be an automorphism is not one."""


class NotInducible(Wes6Error):
    """A map does not descend to the requested quotient."""


class NotAChainComplex(Wes6Error):
    """Consecutive differentials do not compose to zero."""
