"""Exception hierarchy shared by all modules."""


class HoloCurveError(Exception):
    """Base class for every error raised by this package."""


class ParseError(HoloCurveError):
    """Malformed input file, rational string, or JSON schema violation."""


class DegenerateDivisor(HoloCurveError):
    """Division by the zero polynomial, or a GCD of an all-zero family."""


class DegreeOverflow(HoloCurveError):
    """reverse(p, n) called with n < deg p."""


class ValidationError(HoloCurveError):
    """Base class for curve validation failures."""


class NotCoprime(ValidationError):
    """The polynomial triple has a nonconstant common factor."""

    def __init__(self, factor):
        self.factor = factor
        super().__init__(f"components share the common factor {factor}")


class NotFull(ValidationError):
    """The Wronskian of the triple vanishes identically."""


class DegreeTooSmall(ValidationError):
    """The triple has max degree < 2."""


class PolarDegenerate(HoloCurveError):
    """Internal error: the conjugate polar failed validation."""


class SingularTransform(HoloCurveError):
    """A group action was requested with a non-invertible matrix."""


class GenericPositionNotFound(HoloCurveError):
    """The deterministic perturbation search budget was exhausted."""

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"no generic-position transform found in {budget} candidates")


class SpecViolation(HoloCurveError):
    """A kernel spec precondition (monic, coprime, squarefree) failed."""


class RangeViolation(HoloCurveError):
    """A parameter lies outside the admissible integer range."""


class IdentityFailed(HoloCurveError):
    """An exact polynomial identity that must hold did not reduce to zero."""


class QuadratureDiverged(HoloCurveError):
    """Successive quadrature refinements failed to converge."""


class UnknownPreset(HoloCurveError):
    """Unrecognized family preset name."""


class StratumJump(HoloCurveError):
    """The (degree, ramification) stratum changed along a family."""

    def __init__(self, t):
        self.t = t
        super().__init__(f"stratum changed at t = {t}")
