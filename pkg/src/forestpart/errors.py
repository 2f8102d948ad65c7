"""Exception hierarchy shared by all modules."""


class ForestPartError(Exception):
    """Base class for every error raised by this package."""


class GraphInputError(ForestPartError, ValueError):
    pass


class LoopError(GraphInputError):
    pass


class MultiEdgeError(GraphInputError):
    pass


class InconsistentRotation(GraphInputError):
    pass


class NonPlanar(GraphInputError):
    pass


class NotConnected(ForestPartError, ValueError):
    pass


class NotInClass(ForestPartError, ValueError):
    """Input graph is not planar-without-4-and-5-cycles."""


class NotATriangle(ForestPartError, ValueError):
    pass


class PartialAssignment(ForestPartError, ValueError):
    pass


class TooLarge(ForestPartError, ValueError):
    pass


class ParseError(ForestPartError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class InternalInconsistency(ForestPartError, RuntimeError):
    """Raised when an outcome the theory rules out is observed."""


class NoTemplateApplied(ForestPartError, RuntimeError):
    pass


class RoleBindingFailure(ForestPartError, RuntimeError):
    pass
