"""Exception hierarchy shared by every module.

Each class carries a ``code`` naming the domain error; the CLI prints it.
"""


class LinkError(Exception):
    code = "LinkError"


class ArcMultiplicity(LinkError):
    code = "ArcMultiplicity"


class InconsistentOrientation(LinkError):
    code = "InconsistentOrientation"


class ComponentMismatch(LinkError):
    code = "ComponentMismatch"


class BadSelector(LinkError):
    code = "BadSelector"


class NotationSyntaxError(LinkError):
    code = "SyntaxError"

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class SemanticError(LinkError):
    code = "SemanticError"


class RangeError(LinkError):
    code = "RangeError"


class IndexSetError(LinkError):
    code = "IndexError"


class BadParams(LinkError):
    code = "BadParams"


class TooLarge(LinkError):
    code = "TooLarge"


class Disconnected(LinkError):
    code = "Disconnected"


class NotAKnot(LinkError):
    code = "NotAKnot"


class NotProper(LinkError):
    code = "NotProper"


class OddLinking(LinkError):
    code = "OddLinking"


class DisconnectedShadow(LinkError):
    code = "DisconnectedShadow"


class SurfaceIntersection(LinkError):
    code = "SurfaceIntersection"


class SingularGoeritz(LinkError):
    code = "SingularGoeritz"


class NonConvergent(LinkError):
    code = "NonConvergent"


class RepeatedIndex(LinkError):
    code = "RepeatedIndex"


class OutOfRange(LinkError):
    code = "OutOfRange"


class BadK(LinkError):
    code = "BadK"


class SizeMismatch(LinkError):
    code = "SizeMismatch"
