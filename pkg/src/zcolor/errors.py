"""Exception hierarchy for zcolor."""


class ZColorError(Exception):
    """Base class for every error raised by this package."""


class DiagramError(ZColorError):
    pass


class MalformedToken(DiagramError):
    pass


class EmptyInput(DiagramError):
    pass


class EdgeMultiplicity(DiagramError):
    """An edge label does not occur exactly twice."""


class DanglingEdge(DiagramError):
    """Edge labels are not the contiguous range 1..2n."""


class ZeroTwistEntry(DiagramError):
    pass


class NotSquareAfterDrop(ZColorError):
    pass


class MissingArcColor(ZColorError):
    pass


class ZeroScale(ZColorError):
    pass


class IllegalMove(ZColorError):
    pass


class ColorMismatch(ZColorError):
    pass


class NotSimple(ZColorError):
    pass


class MaxTooSmall(ZColorError):
    pass


class Diverged(ZColorError):
    pass


class NotFiveColors(ZColorError):
    pass


class NotInCatalog(ZColorError):
    pass


class NotColorable(ZColorError):
    pass


class ReductionStuck(ZColorError):
    """A reduction case found no move sequence meeting its endpoint contract."""


class SplitDiagram(ZColorError):
    """A reduction that needs a connected diagram was given a split one."""


class InvariantViolation(ZColorError):
    """An internal consistency check failed; this is a bug, not bad input."""
