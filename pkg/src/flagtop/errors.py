"""Exception types shared across the package."""

from __future__ import annotations


class FlagtopError(ValueError):
    """Base class for domain errors."""


class InvalidKindError(FlagtopError):
    """Family/rank combination outside the supported table."""


class NotARootError(FlagtopError):
    """A coordinate vector that is not a root of the given system."""


class IsotropyRootError(FlagtopError):
    """A root inside the isotropy subsystem where one outside it is required."""


class NoConnectingWordError(FlagtopError):
    """Requested reflection word cannot exist (length or residue-class mismatch)."""


class NoLongRootError(FlagtopError):
    """The system contains no long root neighbouring the given short simple root."""


class ContainmentError(FlagtopError):
    """Claimed sublattice is not contained in the ambient lattice."""


class NonreducedSystemError(FlagtopError):
    """Operation defined only for reduced root systems."""


class EquivalenceMismatchError(RuntimeError):
    """Independently computed equivalent conditions disagreed: an internal bug."""
