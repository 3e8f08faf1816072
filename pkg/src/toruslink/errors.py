"""Exception types raised across the package."""


class ToruslinkError(Exception):
    """Base class for all errors raised by toruslink."""


class CompositionMismatch(ToruslinkError):
    pass


class UnmappedGenerator(ToruslinkError):
    pass


class RelationNotLoop(ToruslinkError):
    pass


class DanglingEndpoint(ToruslinkError):
    pass


class NotConnected(ToruslinkError):
    pass


class ConnectorInvalid(ToruslinkError):
    pass


class UnsupportedShape(ToruslinkError):
    pass


class ObjectSetMismatch(ToruslinkError):
    pass


class NonFreeIntersection(ToruslinkError):
    """The intersection groupoid carries relations; only free ones are accepted."""


class UnknownGenerator(ToruslinkError, KeyError):
    pass


class DegreeTooLarge(ToruslinkError, ValueError):
    pass


class InvalidParams(ToruslinkError, ValueError):
    pass


class ParseError(ToruslinkError, ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
