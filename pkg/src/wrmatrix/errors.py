"""Exception types for violated preconditions."""


class HypothesisError(ValueError):
    """A parameter choice violates the hypothesis of the requested construction."""


class SingularWeightError(HypothesisError):
    """``y + x*z == 0``: the Toeplitz-middle factorization is undefined."""


class BoundaryMismatchError(ValueError):
    """The boundary sequences disagree on their shared first term."""
