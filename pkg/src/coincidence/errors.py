"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside the mathematical domain of an operation."""


class NotSublatticeError(DomainError):
    """The inner lattice has non-integral coordinates in the outer basis."""


class NotCoincidenceError(DomainError):
    """The isometry is not a coincidence isometry of the structure."""


class UnsupportedError(DomainError):
    pass


class CapExceeded(RuntimeError):
    """A resource cap was hit during enumeration.

    ``partial`` holds whatever was produced before the cap and
    ``resume_token`` can be handed back to continue from that point.
    """

    def __init__(self, message, partial=None, resume_token=None):
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.resume_token = resume_token
