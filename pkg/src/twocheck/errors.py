"""Shared error hierarchy.

Every validator in this package collects law violations in a deterministic
order and raises the first one; the full tuple is attached as ``.all``.
Witness cells are carried in ``.witness`` so reports can point at the exact
offending cells.
"""

from __future__ import annotations


class TwoCheckError(Exception):
    """Base class; carries a witness dict of offending cells."""

    def __init__(self, message, **witness):
        super().__init__(message)
        self.message = message
        self.witness = witness
        self.all = (self,)

    def __str__(self):
        if self.witness:
            parts = ", ".join(f"{k}={v!r}" for k, v in sorted(self.witness.items()))
            return f"{self.message} [{parts}]"
        return self.message


def raise_first(violations):
    """Raise the first violation, attaching the full list."""
    if violations:
        first = violations[0]
        first.all = tuple(violations)
        raise first


# ---------------------------------------------------------------------------
# fincat


class MissingComposite(TwoCheckError):
    pass


class NonAssociative(TwoCheckError):
    pass


class BadIdentity(TwoCheckError):
    pass


class ResourceBound(TwoCheckError):
    """A constructed object exceeded the global cell budget."""


# ---------------------------------------------------------------------------
# twocat


class InterchangeViolation(TwoCheckError):
    pass


class NonAssociativeHComp(TwoCheckError):
    pass


class NotClosedUnderComposition(TwoCheckError):
    pass


class MissingIdentity(TwoCheckError):
    pass


class HostMismatch(TwoCheckError):
    pass


# ---------------------------------------------------------------------------
# transform


class TypeMismatch(TwoCheckError):
    pass


class UnitAxiom(TwoCheckError):
    pass


class CompositionAxiom(TwoCheckError):
    pass


class TwoCellNaturality(TwoCheckError):
    pass


class ModificationAxiom(TwoCheckError):
    pass


# ---------------------------------------------------------------------------
# elements


class RestrictionFailure(TwoCheckError):
    """A cone crossed a family restriction that the theory forbids; engine bug."""


# ---------------------------------------------------------------------------
# monad


class NaturalityViolation(TwoCheckError):
    pass


class MonadLaw(TwoCheckError):
    pass


class FunctorLaw(TwoCheckError):
    pass


class CoherenceUnit(TwoCheckError):
    pass


class CoherenceMult(TwoCheckError):
    pass


class NotInOmega(TwoCheckError):
    pass


class AlgebraCellAxiom(TwoCheckError):
    pass


# ---------------------------------------------------------------------------
# lifting


class NotCompatible(TwoCheckError):
    pass


class MediatorMissing(TwoCheckError):
    pass


class NotInvertible(TwoCheckError):
    pass


class EquifyFailure(TwoCheckError):
    pass


class PreconditionFailure(TwoCheckError):
    pass


class VerificationFailure(TwoCheckError):
    """A proven conclusion failed to check: signals an engine bug."""


class SubsetFailure(TwoCheckError):
    pass


# ---------------------------------------------------------------------------
# dsl


class ParseError(TwoCheckError):
    def __init__(self, message, line, column, expected=()):
        super().__init__(message, line=line, column=column)
        self.line = line
        self.column = column
        self.expected = tuple(expected)


class UnresolvedReference(TwoCheckError):
    pass


class ElaborationError(TwoCheckError):
    """Wraps a module error with the source span it came from."""

    def __init__(self, message, span, cause=None):
        super().__init__(message, span=span)
        self.span = span
        self.cause = cause
