"""Exception types shared across the toolkit.

Every rejection that is part of an operation's contract gets its own class so
callers (and the CLI) can map failures to diagnostics without string matching.
"""


class OrbitcertError(Exception):
    """Base class for all toolkit errors."""


class FamilyMismatchError(OrbitcertError):
    """Two elements of different group families were combined."""


class UnsupportedSubgroupError(OrbitcertError):
    """A subgroup descriptor kind is not usable for the requested family."""


class DuplicateVertexError(OrbitcertError):
    """A vertex list handed to a window contained duplicates."""


class WindowError(OrbitcertError):
    """A finite window could not be materialized from an oracle."""


class SizeCapError(OrbitcertError):
    """An exhaustive search was asked to exceed its configured cap."""


class ConnectionSetError(OrbitcertError):
    """A Cayley connection set was asymmetric or contained the identity."""


class InvalidRuleError(OrbitcertError):
    """A product rule declared equal coordinates adjacent."""


class PairInvariantError(OrbitcertError):
    """A characteristic pair violated symmetry / bi-invariance / disjointness."""


class InvarianceError(OrbitcertError):
    """A vertex predicate was not invariant on the tested window."""


class RelationError(OrbitcertError):
    """Generator images do not satisfy the relations of the source group."""


class MissingEntryError(OrbitcertError):
    """A permutation table lacks an entry that a check needs."""


class FolnerDefectError(OrbitcertError):
    """The supplied set is not invariant enough for the requested tolerance."""

    def __init__(self, message, defect):
        super().__init__(message)
        self.defect = defect


class STooSmallError(OrbitcertError):
    """The scanned good set is too small for the requested tolerance."""

    def __init__(self, message, fraction):
        super().__init__(message)
        self.fraction = fraction


class CapExhaustedError(OrbitcertError):
    """No extension was found within the size cap (grow the cap, not a proof
    of nonexistence)."""


class ClosenessError(OrbitcertError):
    """Two pointed actions disagree on the required finite set."""

    def __init__(self, message, element):
        super().__init__(message)
        self.element = element


class SupportError(OrbitcertError):
    """A word's support escapes the window of the certificate."""


class MalformedInputError(OrbitcertError):
    """A JSON document does not match the documented schema."""
