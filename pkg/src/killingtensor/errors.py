"""Exception types shared across the package.

The hierarchy distinguishes three failure modes a caller may want to handle
separately: malformed input data, a random search that exhausted its retry
budget, and an internal consistency check that did not hold.
"""

from __future__ import annotations

__all__ = [
    "InvalidArgument",
    "UnsupportedForm",
    "SamplingFailure",
    "IdentityViolation",
]


class InvalidArgument(ValueError):
    """Raised when input data fails validation.

    Examples: a tensor whose symmetries do not match the declared form,
    a metric signature inconsistent with the dimension, a malformed
    partition or tableau string.
    """


class UnsupportedForm(InvalidArgument):
    """Raised when a requested evaluation form does not apply to the input.

    The curvature-form variant of the first condition requires an ambient
    inverse metric that the flat model does not provide in the same shape,
    so requesting it there raises this error rather than silently computing
    something else.
    """


class SamplingFailure(RuntimeError):
    """Raised when random search exhausts its retry budget.

    Point sampling on a model surface rejects degenerate draws (for example
    a direction vector whose norm makes the stereographic formula singular);
    if every retry is rejected this error reports the budget that was spent.
    """


class IdentityViolation(AssertionError):
    """Raised when an unconditional internal identity fails to hold.

    These identities are mathematical facts about every tensor with the
    declared symmetries, so a violation indicates corrupted input or an
    implementation bug, never a property of the particular tensor.  The
    message names the specific identity that failed.
    """
