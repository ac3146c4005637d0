"""Exception hierarchy shared by all modules."""


class WeakHamError(Exception):
    """Base class for every error raised by this package."""


# map_core

class MapError(WeakHamError, ValueError):
    pass


class DanglingDart(MapError):
    pass


class Disconnected(MapError):
    pass


class NonSphere(MapError):
    pass


class Bridge(MapError):
    pass


class Loop(MapError):
    pass


# resolution

class NoSuchVertex(WeakHamError, KeyError):
    pass


class DegreeTooLow(WeakHamError, ValueError):
    pass


class IncompleteCorrespondence(WeakHamError, ValueError):
    pass


# factors / mutation

class NotCubic(WeakHamError, ValueError):
    pass


class NotTwoRegular(WeakHamError, ValueError):
    pass


class NotWeakHamiltonian(WeakHamError, ValueError):
    pass


class OddCycle(WeakHamError, ValueError):
    pass


class SelectionLengthMismatch(WeakHamError, ValueError):
    pass


# coloring

class ParityInconsistency(WeakHamError, RuntimeError):
    pass


class NotCoveringPair(WeakHamError, ValueError):
    pass


class ImproperColoring(WeakHamError, ValueError):
    pass


# moduli

class MissingThirdVertex(WeakHamError, RuntimeError):
    pass


class EdgeInTwoCliques(WeakHamError, RuntimeError):
    pass


class OverlapTooLarge(WeakHamError, RuntimeError):
    pass


class UnknownClique(WeakHamError, KeyError):
    pass


class TooLarge(WeakHamError, ValueError):
    pass


# io_cli

class ParseError(WeakHamError, ValueError):
    def __init__(self, message, line=None, field=None):
        super().__init__(message)
        self.line = line
        self.field = field

    def __str__(self):
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.field is not None:
            where.append(f"field {self.field!r}")
        msg = super().__str__()
        return f"{msg} ({', '.join(where)})" if where else msg


class BadHeader(WeakHamError, ValueError):
    pass


class TruncatedRecord(WeakHamError, ValueError):
    pass


class UnknownGenerator(WeakHamError, ValueError):
    pass


class BadParameter(WeakHamError, ValueError):
    pass
