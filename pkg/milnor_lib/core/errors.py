"""
Exception types for the link invariant library.

All library errors derive from MilnorLibError so callers (and the CLI)
can catch them in one place and map them to exit codes.
"""


class MilnorLibError(Exception):
    """Base class for every error raised by milnor_lib."""


class DiagramError(MilnorLibError, ValueError):
    """A diagram failed validation (incidence, orientation, component structure)."""


class PDSyntaxError(DiagramError):
    """
    PD text could not be tokenized.

    Attributes:
        position (int): Character offset of the offending input
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BraidError(DiagramError):
    """A braid word references a generator outside 1..strands-1."""


class MoveError(MilnorLibError, ValueError):
    """A move site does not exist or does not qualify for the requested move."""


class InvariantError(MilnorLibError, ValueError):
    """Bad arguments to an invariant computation (index, sequence, truncation)."""


class ResourceGuardError(MilnorLibError, RuntimeError):
    """A Milnor table would exceed the configured sequence budget."""


class OracleBudgetError(MilnorLibError, RuntimeError):
    """The fixed-point oracle did not stabilize within its sweep budget."""
