"""Exception hierarchy shared by every snarklab module."""


class SnarkLabError(Exception):
    """Base class for all library errors."""


class GraphError(SnarkLabError, ValueError):
    pass


class NotCubic(GraphError):
    pass


class NotSimple(GraphError):
    pass


class Inconsistent(GraphError):
    pass


class FormatError(SnarkLabError, ValueError):
    pass


class PaperSyntaxError(FormatError):
    pass


class DuplicateEdge(FormatError):
    pass


class MalformedGraph6(FormatError):
    pass


class NonAdjacentPair(FormatError):
    pass


class OverlappingCycles(FormatError):
    pass


class SizeCapExceeded(SnarkLabError):
    pass


class NotAHist(SnarkLabError, ValueError):
    pass


class InvalidAnchors(SnarkLabError, ValueError):
    pass


class NoValidAnchors(SnarkLabError):
    pass


class ElementAbsent(SnarkLabError, ValueError):
    pass


class VerificationFailed(SnarkLabError):
    pass


class UnknownFixture(SnarkLabError, KeyError):
    pass


class FixtureCorrupt(SnarkLabError):
    pass


class NotAdmissible(SnarkLabError, ValueError):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ConstructionFailed(SnarkLabError):
    pass
