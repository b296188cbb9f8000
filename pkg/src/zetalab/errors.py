"""Exception hierarchy.

Everything raised on purpose by zetalab derives from ZetalabError, so
callers (and the CLI, which maps these to exit code 2) can catch one
type.  Bounds/domain violations also subclass ValueError to stay
friendly to generic callers.
"""


class ZetalabError(Exception):
    """Base class for all errors raised by zetalab."""


class BoundsError(ZetalabError, ValueError):
    """An integer argument is outside the table or cap it must lie in."""


class DomainError(ZetalabError, ValueError):
    """An evaluation point is outside the operation's validated domain."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class ConditioningError(ZetalabError, ArithmeticError):
    """The requested formula is ill-conditioned here; use the alternate
    evaluator instead."""


class PrecisionError(ZetalabError, ArithmeticError):
    """The requested tolerance cannot be met in double precision."""


class RefinementError(ZetalabError, ArithmeticError):
    """A root bracket stopped shrinking or lost its sign change."""


class UsageError(ZetalabError, ValueError):
    """Malformed user input (bad range syntax, degenerate grid, ...)."""
