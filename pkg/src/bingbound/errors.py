"""Exception types raised across the package."""


class BingBoundError(Exception):
    """Base class for all errors raised by bingbound."""


class SeifertError(BingBoundError):
    pass


class OddSizeError(SeifertError):
    pass


class NotUnimodularIntersectionError(SeifertError):
    pass


class NotCoprimeError(SeifertError):
    pass


class UnknownAtomError(BingBoundError):
    pass


class NoMatrixForAtomError(BingBoundError):
    pass


class TauUnknownForAtomError(BingBoundError):
    pass


class DomainError(BingBoundError, ValueError):
    pass


class TreeError(BingBoundError):
    pass


class NotACherryError(TreeError):
    pass


class WouldTrivializeError(TreeError):
    pass


class NotDepthOneLeafError(TreeError):
    pass


class ParseError(BingBoundError):
    """Raised for malformed knot expressions; ``position`` is a 0-based offset."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}")
        self.text = text
        self.position = position
