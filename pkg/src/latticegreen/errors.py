"""Exception and warning types shared across the package."""


class LatticeGreenError(Exception):
    """Base class for all numerical errors raised by this package."""


class DomainError(LatticeGreenError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NonConvergence(LatticeGreenError):
    """A series or recurrence failed to meet its tail bound within the term budget."""


class ResonantParameter(LatticeGreenError):
    """The spectral parameter collides with a quasimomentum pole (cosh v = cos Q).

    Zeros of the propagator denominator are simple poles; they are detected
    and reported, never regularized.
    """


class PoleError(LatticeGreenError):
    """Evaluation requested exactly at a pole of coth/cot in an eigenvalue equation."""


class RootCountMismatch(LatticeGreenError):
    """A root scan produced a different number of states than the sector requires."""


class ConvergenceError(LatticeGreenError):
    """An iterative eigensolver did not reach its off-diagonal threshold."""


class DegenerateAmplitude(LatticeGreenError):
    """An amplitude formula evaluated to the zero sequence (spurious root)."""


class TruncationWarning(UserWarning):
    """A truncated series was returned although its tail bound was not met."""
