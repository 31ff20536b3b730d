"""Exception types shared across the package.

Every failure mode that a caller can reasonably recover from gets its own
class; anything else is allowed to surface as a plain ValueError/KeyError
from the offending computation.
"""


class MiniWError(Exception):
    """Base class for all package-specific errors."""


class UnsupportedAlgebraError(MiniWError):
    """Requested algebra is not in the supported family."""


class SingularGramError(MiniWError):
    """A pairing that must be non-degenerate came out singular."""


class NotInCentralizerError(MiniWError):
    """Element passed to a centralizer-only operation does not centralize f."""


class LevelMismatchError(MiniWError):
    """Two affine weights with different levels were compared."""


class WindowOverflowError(MiniWError):
    """An operator pushed a vector outside the module's truncation window."""


class NotStabilizedError(MiniWError):
    """Truncated dimensions kept changing while the window grew."""


class NilpotencyError(MiniWError):
    """d^2 (or one of its split parts) returned a nonzero residual."""


class WindowTooSmallError(MiniWError):
    """A triangular inversion was underdetermined on the given window."""


class CriticalLevelError(MiniWError):
    """Structure constants degenerate at level k = -h^vee."""
