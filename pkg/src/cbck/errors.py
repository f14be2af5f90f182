"""Exception hierarchy.

``ValidationError`` subclasses signal bad input (CLI exit code 2).
``PropertyViolation`` subclasses signal that a proven structural property
failed to hold on a computed object (CLI exit code 3).
"""


class CbckError(Exception):
    pass


class ValidationError(CbckError, ValueError):
    pass


class ParseError(ValidationError):
    pass


class CycleError(ValidationError):
    pass


class MultiRootError(ValidationError):
    pass


class MultiAtomError(ValidationError):
    pass


class DivisorError(ValidationError):
    pass


class AnchorError(ValidationError):
    pass


class ArityError(ValidationError):
    pass


class AtomError(ValidationError):
    pass


class LimitError(ValidationError):
    pass


class SizeError(ValidationError):
    pass


class PreconditionError(ValidationError):
    pass


class PropertyViolation(CbckError, AssertionError):
    pass


class MinimalityError(PropertyViolation):
    pass
