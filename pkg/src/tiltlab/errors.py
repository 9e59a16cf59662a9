"""Exception hierarchy.

Precondition failures derive from :class:`TiltlabError`. Internal consistency
failures (conditions that can only arise from a bug in the engine) derive from
:class:`EngineBug` so callers can tell the two apart.
"""


class TiltlabError(Exception):
    pass


class CyclicQuiver(TiltlabError):
    pass


class BadArrow(TiltlabError):
    pass


class UnknownVertex(TiltlabError, KeyError):
    pass


class NotSourceOrSink(TiltlabError):
    pass


class NotSource(TiltlabError):
    pass


class NotSink(TiltlabError):
    pass


class QuiverMismatch(TiltlabError):
    pass


class ShapeMismatch(TiltlabError):
    pass


class NotTypeA(TiltlabError):
    pass


class BadInterval(TiltlabError):
    pass


class NotRepFinite(TiltlabError):
    pass


class NotARoot(TiltlabError):
    pass


class HasSimpleSummandAtX(TiltlabError):
    pass


class ContainsSimpleAtX(TiltlabError):
    pass


class TableMismatch(TiltlabError):
    pass


class NotMonotone(TiltlabError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GuardExceeded(TiltlabError):
    pass


class EngineBug(RuntimeError):
    pass


class NegativeExt(EngineBug):
    pass


class DirectednessViolation(EngineBug):
    pass


class InconsistentDecomposition(EngineBug):
    pass


class NotAPartialOrder(EngineBug):
    pass
