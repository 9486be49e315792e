"""Exception taxonomy for the toolkit.

Every failure mode that a caller can act on gets its own class; all inherit
from ValshareError so CLI code can catch the lot and map to exit codes.
"""


class ValshareError(Exception):
    """Base class for all toolkit errors."""


class ZeroParameter(ValshareError):
    """A family parameter that must be nonzero was zero."""


class EvaluationRangeError(ValshareError):
    """|e^{freq*z}| overflows double precision at the evaluation point."""

    def __init__(self, freq, z):
        self.freq = freq
        self.z = z
        super().__init__(f"e^(freq*z) overflows for freq={freq} at z={z}")


class EvaluationPoleError(ValshareError):
    """Division by a value of magnitude < 1e-300 during pointwise evaluation."""

    def __init__(self, z):
        self.z = z
        super().__init__(f"pole encountered at z={z}")


class IncommensurableFrequencies(ValshareError):
    """Frequency ratios are not all rational; no Laurent representation exists."""


class NonIntegerRatio(ValshareError):
    """A supplied Laurent base does not divide every frequency."""


class BaseMismatch(ValshareError):
    """Arithmetic between Laurent polynomials with different bases."""


class DivisionByZeroPolynomial(ValshareError):
    """Laurent division by the zero polynomial."""


class ParseError(ValshareError):
    """Syntax error with position and expected-token information."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        hint = f" (expected one of: {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at line {line}, column {column}{hint}")


class UnboundIdentifier(ValshareError):
    """An identifier in an expression has no binding in the environment."""


class DenominatorIdenticallyZero(ValshareError):
    """The cleared denominator of an expression is the zero function."""


class PoleAtAllSamples(ValshareError):
    """Sampled identity check could not find enough pole-free sample points."""


class BoundaryTooClose(ValshareError):
    """An a-point sits too close to a contour for reliable quadrature."""

    def __init__(self, message, min_abs=None, location=None):
        self.min_abs = min_abs
        self.location = location
        super().__init__(message)


class QuadratureNonConvergent(ValshareError):
    """Adaptive quadrature failed to converge within the depth budget."""


class NewtonDivergence(ValshareError):
    """Newton refinement left the search box and the fallback also failed."""


class NotAnAPoint(ValshareError):
    """multiplicity_at called at a point where f is not close to the target."""


class AmbiguousMultiplicity(ValshareError):
    """Circle count and derivative test disagree on a point's multiplicity."""


class APointOnCircle(ValshareError):
    """A root sits on the integration circle even after jitter retries."""


class ZeroAtOrigin(ValshareError):
    """Jensen check requires f(0) != 0."""


class ZeroOnCircle(ValshareError):
    """Jensen check requires no zero on the integration circle."""


class DegenerateFit(ValshareError):
    """Order estimation on a constant characteristic."""


class CharacteristicTooSmall(ValshareError):
    """Defect estimation needs T(r) > 10 for a meaningful quotient."""


class HypothesisFails(ValshareError):
    """Strict-mode audit: the shared-simple-zeros hypothesis fails."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class InconsistentSystem(ValshareError):
    """Coefficient matching left a nonzero residual (implementation bug guard)."""


class DegenerateGamma(ValshareError):
    """Cubic classifier requires a nonzero leading parameter."""


class NumericAmbiguity(ValshareError):
    """Float-mode curve classification near a singular configuration."""
