"""Exception types and process exit codes."""

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNSTABLE = 2
EXIT_EXCLUDED = 3


class PolarlinkError(Exception):
    """Base class for all engine errors."""


class ParseError(PolarlinkError):
    """Raised on malformed polynomial input; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExcludedCaseError(PolarlinkError):
    """The input falls outside the standing assumptions: f(0) = 0 and the
    origin a singular point of a not-locally-constant f.

    `reason` is a short machine-readable string, one per excluded case.
    """

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class ImproperIntersection(PolarlinkError):
    """Polar ideal meets the coordinate plane in positive dimension; the
    sampled frame is not generic for this slice."""


class WrongPolarDimension(PolarlinkError):
    """Polar ideal has local dimension different from the expected k."""


class NoValidFrame(PolarlinkError):
    """Every sampled frame failed the genericity checks for some k."""


class GammaIdentityViolation(PolarlinkError):
    """A computed profile broke one of the hard identities (gamma^n must
    equal mult - 1); indicates an engine bug or insufficient genericity."""


class TelescopeViolation(PolarlinkError):
    """Alternating partial sums of lambda disagree with gamma; impossible
    when lambda is built from gamma, so always a bug."""


class NonIsolated(PolarlinkError):
    """An operation requiring an isolated singularity met an infinite
    Milnor number."""
