"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation landed on, or numerically too near, a pole.

    The ``locus`` attribute names the pole family that was hit: ``"b"``
    or ``"t"`` for the Jordan-Kronecker variables, ``"z=w"`` for the
    diagonal pole of the conjugate kernel.
    """

    def __init__(self, message: str, locus: str):
        super().__init__(message)
        self.locus = locus


class NonConvergence(RuntimeError):
    """A series or product failed to reach tolerance within the term cap."""


class SingularSystem(RuntimeError):
    """A linear system that should be positive definite came out singular."""
