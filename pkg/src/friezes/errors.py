"""Exception hierarchy shared by the library and the CLI."""


class FriezeError(Exception):
    """Base class for all library errors."""


class BadShape(FriezeError):
    pass


class NonPositiveLabel(FriezeError):
    pass


class PtolemyViolation(FriezeError):
    def __init__(self, quad, lhs, rhs):
        self.quad = quad
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            "Ptolemy relation fails at %s: %d != %d" % (quad, lhs, rhs))


class BadSubset(FriezeError):
    pass


class NonPositiveScalar(FriezeError):
    pass


class WindowTooSmall(FriezeError):
    pass


class CapExceeded(FriezeError):
    pass


class BadApex(FriezeError):
    pass


class BadTriangulation(FriezeError):
    pass


class InternalInconsistency(FriezeError):
    pass


class NotConwayCoxeter(FriezeError):
    pass


class NotATriangulation(FriezeError):
    pass


class PreconditionUnmet(FriezeError):
    pass


class EdgeLabelOne(FriezeError):
    pass


class NotBoundaryEdge(FriezeError):
    pass


class NoAdmissibleResidue(FriezeError):
    pass


class InvalidChoice(FriezeError):
    pass


class NonIntegralY(FriezeError):
    pass


class PostconditionFailed(FriezeError):
    pass


class NotEmbeddable(FriezeError):
    def __init__(self, report):
        self.report = report
        super().__init__("frieze fails the embeddability criterion")


class StepLimitExceeded(FriezeError):
    pass


class ParseError(FriezeError):
    def __init__(self, reason, position=None):
        self.reason = reason
        self.position = position
        where = "" if position is None else " at %s" % (position,)
        super().__init__("parse error%s: %s" % (where, reason))


class ValidationError(FriezeError):
    pass


class UnsupportedFormat(FriezeError):
    pass
