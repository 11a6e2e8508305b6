"""Exception types raised by pairdom operations."""


class PairDomError(Exception):
    """Base class for all pairdom domain errors."""


# ---- tree construction / parsing ----

class CycleDetected(PairDomError):
    """The parent array contains a cycle."""


class MultipleRoots(PairDomError):
    """More than one vertex has parent rank 0."""


class DanglingParentRank(PairDomError):
    """A parent rank lies outside [0, n]."""


class SequenceEntryOutOfRange(PairDomError):
    """A Pruefer sequence entry lies outside [1, n]."""


class InvalidPrefix(PairDomError):
    """A degree sequence prefix closes the tree too early."""


class WrongTotal(PairDomError):
    """Degree sequence does not sum to n - 1."""


class MalformedHeader(PairDomError):
    """Tree text does not start with a valid vertex count line."""


class TokenCountMismatch(PairDomError):
    """Tree text has the wrong number of parent-rank tokens."""


# ---- algorithm preconditions ----

class SingleVertex(PairDomError):
    """Paired domination is undefined for a one-vertex tree."""


class NotCanonical(PairDomError):
    """The algorithm requires BFS-monotone vertex ranks."""


class TooLarge(PairDomError):
    """Exhaustive search is capped at 18 vertices."""


# ---- sampling / numerics ----

class RejectionTimeout(PairDomError):
    """Rejection sampling exceeded its round cap."""


class InvalidDistribution(PairDomError):
    """Offspring law fails a required property (criticality, aperiodicity, ...)."""


class NoConvergence(PairDomError):
    """Fixed-point iteration did not reach the requested tolerance."""


class DomainError(PairDomError):
    """Argument outside the mathematical domain of the operation."""


class InsufficientReps(PairDomError):
    """Too few samples for the requested diagnostic."""
