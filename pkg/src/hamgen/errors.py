"""Exception hierarchy.

Every error raised on bad input derives from :class:`HamgenError`, which is
itself a ``ValueError`` so callers that only care about "bad argument" can
catch the builtin.
"""


class HamgenError(ValueError):
    pass


# graph-core
class LoopEdge(HamgenError):
    pass


class DuplicateEdge(HamgenError):
    pass


class OutOfRange(HamgenError):
    pass


class TooLarge(HamgenError):
    pass


class EmptySet(HamgenError):
    pass


class Overlap(HamgenError):
    pass


class FormatError(HamgenError):
    pass


# gf2-space
class UnknownEdge(HamgenError):
    pass


class LengthMismatch(HamgenError):
    pass


# hamilton
class TooSmall(HamgenError):
    pass


class SameVertex(HamgenError):
    pass


class EndpointInInterior(HamgenError):
    pass


class KTooSmall(HamgenError):
    pass


class KOutOfRange(HamgenError):
    pass


class BadPartition(HamgenError):
    pass


class NotBalanced(HamgenError):
    pass


class NotMatching(HamgenError):
    pass


# structures
class NotUDP(HamgenError):
    """The given paths do not form a union of disjoint paths."""


class NotDisjoint(NotUDP):
    pass


class NonEdge(NotUDP):
    pass


class DegreeViolation(NotUDP):
    pass


class NotBipartiteInput(HamgenError):
    pass


class BudgetExceeded(HamgenError):
    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class PairsOverlap(HamgenError):
    pass


# hamgen
class EvenOrder(HamgenError):
    pass


class NotHamiltonian(HamgenError):
    pass


class BadLength(HamgenError):
    pass


class BadPath(HamgenError):
    pass


class BadSwitcher(HamgenError):
    pass


# classification
class BadSizes(HamgenError):
    pass


class ShapeMismatch(HamgenError):
    pass


# constructions
class EvenN(HamgenError):
    pass


class SearchCapped(Exception):
    """A budgeted search stopped before it could decide the question.

    Deliberately not a ``ValueError``: the input was fine, the answer is
    simply unknown.
    """

    def __init__(self, message, nodes=0):
        super().__init__(message)
        self.nodes = nodes
