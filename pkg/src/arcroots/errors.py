"""Exception types shared across the package.

Every error raised on bad input or on a violated precondition derives from
ArcrootsError, so callers can catch one type at the boundary.  Exceptions
that signal an internal invariant breaking (rather than bad input) say so
in their docstring.
"""

from __future__ import annotations


class ArcrootsError(Exception):
    """Base class for all errors raised by this package."""


class NoDecreasingMutation(ArcrootsError):
    """No mutation direction strictly decreases the weights."""


class MultipleDecreasingMutations(ArcrootsError):
    """More than one direction decreases the weights (out-of-class input)."""


class NotMutationAcyclic(ArcrootsError):
    """A non-acyclic matrix admits no decreasing mutation, so no acyclic
    representative can be reached by weight descent."""


class IncompleteTournament(ArcrootsError):
    """An acyclic matrix has a zero off-diagonal pair, so its vertices carry
    no unique total order."""


class NotAcyclic(ArcrootsError):
    """The operation needs an acyclic matrix."""


class NotNormalized(ArcrootsError):
    """The operation needs b[i][j] >= 0 for i < j."""


class NotAReflection(ArcrootsError):
    """The word is not an odd-length palindrome after reduction."""


class NotUnitRoot(ArcrootsError):
    """Reflection vector must have self-pairing 2."""


class NotARealRoot(ArcrootsError):
    """The vector is not a real root of the form (self-pairing 2, coherent
    signs, finite reflection descent)."""


class SignIncoherent(ArcrootsError):
    """A vector mixes strictly positive and strictly negative entries."""


class RankTooLarge(ArcrootsError):
    """Brute-force guard: the ordering search is factorial in the rank."""


class WrongArity(ArcrootsError):
    """Tuple length or letter range does not match the rank."""


class UnreducedArc(ArcrootsError):
    """Crossing sequence has an adjacent repeat or ends at its own puncture."""


class TwinEndpointClash(ArcrootsError):
    """Twin construction needs the two arcs to end at distinct punctures."""


class LengthPreconditionError(ArcrootsError):
    """The walk needs the moving arc to be long enough that twin
    replacements cannot exhaust it."""


class TwinDisjunctionError(ArcrootsError):
    """Both an arc and its twin form a bad pair with the same obstacle.
    This cannot happen for valid inputs; it signals a bug in this library,
    not in the caller."""


class CapExceeded(ArcrootsError):
    """The search space is larger than the configured cap."""


class NotEmbeddable(ArcrootsError):
    """The arc admits no embedding, so no seed can contain it."""


class DepthExhausted(ArcrootsError):
    """The search reached its depth limit without finding the target."""
