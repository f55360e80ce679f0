"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: bad user input exits
with 3, violated hypotheses/preconditions with 2, and a falsified
verification check with 1.
"""


class CoxeterInputError(ValueError):
    """Malformed input: bad Coxeter matrix, word, group file, or flag value."""


class PreconditionError(ValueError):
    """A check was invoked on data that violates its stated hypotheses."""
