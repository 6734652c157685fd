"""Exception hierarchy.  Each class maps to one CLI diagnostic."""


class QuasifoldError(Exception):
    """Base class for all input and consistency errors."""

    code = "Error"


class ParseError(QuasifoldError):
    code = "ParseError"


class FieldMismatch(QuasifoldError):
    code = "FieldMismatch"


class NonSimple(QuasifoldError):
    code = "NonSimple"


class Unbounded(QuasifoldError):
    code = "Unbounded"


class Empty(QuasifoldError):
    code = "Empty"


class Redundant(QuasifoldError):
    """A half-space that is never active at a vertex."""

    code = "Redundant"


class NotSurjective(QuasifoldError):
    code = "NotSurjective"


class NonGeneric(QuasifoldError):
    code = "NonGeneric"


class OutsideDelta(QuasifoldError):
    code = "OutsideDelta"


class IndexBoundViolation(QuasifoldError):
    code = "IndexBoundViolation"


class NegativeEntry(QuasifoldError):
    code = "NegativeEntry"


class EulerMismatch(QuasifoldError):
    code = "EulerMismatch"
