"""
Error kinds raised by the CurveSig library.

Every library failure derives from CurveSigError so the CLI and the
validation runners can report it with a single except clause.
"""


class CurveSigError(Exception):
    """Base class for all CurveSig errors"""


class SchemeSyntaxError(CurveSigError):
    """Malformed scheme string; `position` is the 0-based character offset"""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class EmptySchemeError(CurveSigError):
    """Even-type scheme without ovals (the link would be empty)"""


class MalformedTreeError(CurveSigError):
    """Vertex/edge data that does not describe a tree"""


class SingularMatrixError(CurveSigError):
    pass


class NotSymmetricError(CurveSigError):
    pass


class NonIntegralCharDataError(CurveSigError):
    """Δ or c came out non-integral: the plumbing tree was built wrong"""


class NonIntegralInvariantError(CurveSigError):
    """A curve-level signature or nullity came out non-integral"""


class NotCharacteristicError(CurveSigError):
    pass


class ZeroVectorError(CurveSigError):
    pass


class EmptyLinkError(CurveSigError):
    pass


class UndefinedResidueError(CurveSigError):
    """Residue mod p of a rational whose denominator is divisible by p"""


class NonOddPrimeError(CurveSigError):
    pass


class BadParametersError(CurveSigError):
    pass


class NotEvenTypeError(CurveSigError):
    pass


class ProfileInconsistencyError(CurveSigError):
    """Step-function samples disagree inside one interval or around a breakpoint"""
