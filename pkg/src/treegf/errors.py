"""Exception hierarchy shared by every treegf module."""


class TreeGFError(ValueError):
    """Base class for all errors raised by treegf."""


class NotATree(TreeGFError):
    pass


class MixedRings(TreeGFError):
    pass


class VertexOutOfRange(TreeGFError):
    pass


class NotPendant(TreeGFError):
    pass


class NotLive(TreeGFError):
    pass


class SameVertex(TreeGFError):
    pass


class TooLarge(TreeGFError):
    pass


class BadParameters(TreeGFError):
    pass


class NotNeighbor(TreeGFError):
    pass


class BranchTooLarge(TreeGFError):
    pass


class NotPendantPath(TreeGFError):
    pass


class LegTooShort(TreeGFError):
    pass


class ParseError(TreeGFError):
    """A tree file could not be parsed; ``line`` is 1-based (0 when unknown)."""

    def __init__(self, message, line=0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)
