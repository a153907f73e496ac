"""Exception hierarchy.

Domain errors (bad input, degenerate configurations) derive from
:class:`HoweError`; broken internal invariants derive from
:class:`InvariantViolation`.  The CLI maps the former to exit status 1 and
the latter to exit status 2.
"""


class HoweError(ValueError):
    """Invalid or degenerate input."""


class FieldError(HoweError):
    """Unsupported field, mismatched contexts, or bad element syntax."""


class SingularCurveError(HoweError):
    """The model has repeated branch points."""


class DegenerateError(HoweError):
    """A formula hit a vanishing denominator or a degenerate configuration."""


class TooLargeError(HoweError):
    """Parameters exceed the documented brute-force limits."""


class InvariantViolation(RuntimeError):
    """An internal mathematical invariant failed.  Never expected."""


class HasseWeilViolation(InvariantViolation):
    """A point count fell outside the Hasse-Weil interval."""
