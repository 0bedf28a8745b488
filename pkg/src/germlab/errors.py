"""Exception hierarchy shared by every module."""


class GermlabError(ValueError):
    pass


# semigroup tables
class InvalidTable(GermlabError):
    pass


class NonAssociative(InvalidTable):
    pass


class NoUniqueInverse(InvalidTable):
    pass


class NoZero(InvalidTable):
    pass


class IdempotentsDontCommute(InvalidTable):
    pass


class CNotContained(GermlabError):
    pass


# clopen sets
class AlphabetMismatch(GermlabError):
    pass


# actions
class InvalidAction(GermlabError):
    pass


class NotIdempotent(GermlabError):
    pass


class OutOfDomain(GermlabError):
    pass


# germs and subsemigroups
class NotComposable(GermlabError):
    pass


class NotFiniteModel(GermlabError):
    pass


class NotWide(GermlabError):
    pass


class NotSubsemigroup(GermlabError):
    pass


class NotStronglyTight(GermlabError):
    pass


class NotPartialHom(GermlabError):
    pass


class HypothesisFailed(GermlabError):
    """A theorem's hypothesis does not hold for the supplied instance.

    Distinct from a failed conclusion: the theorem makes no claim here.
    """


# polycyclic
class ZeroHasNoLevel(GermlabError):
    pass


class BoundTooSmall(GermlabError):
    pass


# groupoids and bisections
class InvalidGroupoid(GermlabError):
    pass


class NotCompatible(GermlabError):
    pass


class TooLarge(GermlabError):
    pass
