"""Exception types shared across the package."""


class HeckecellsError(Exception):
    """Base class for all package errors."""


class UnknownGenerator(HeckecellsError):
    """A word uses a letter that is not a generator of the system."""


class HorizonExceeded(HeckecellsError):
    """A computation stepped outside the configured Cayley ball."""


class InfiniteParabolic(HeckecellsError):
    """Longest element requested for an infinite parabolic subgroup."""


class InconsistentBar(HeckecellsError):
    """The bar anti-invariance assertion failed during a KL solve.

    This signals an implementation bug, never bad input.
    """


class UnsupportedLemma(HeckecellsError):
    """Unknown lemma identifier passed to a dihedral sweep."""


class NotDimensionTwo(HeckecellsError):
    """The system has a finite parabolic subgroup of rank 3."""


class NotApplicableSystem(HeckecellsError):
    """Cell machinery requested for a system outside its proven range."""


class NotInD(HeckecellsError):
    """An element was expected to be distinguished but is not."""


class NonUniqueDecomposition(HeckecellsError):
    """decompose() found zero or several (b, d, y) triples for one element."""


class UnequalAValues(HeckecellsError):
    """Two-sided classification requested for elements with different a'."""


class UndefinedInChamber(HeckecellsError):
    """A distinguished-element symbol does not exist under the chamber's signs."""


class ConstraintUnsatisfiable(HeckecellsError):
    """No pool element satisfies an expansion subcase's descent conditions."""


class UnsupportedWithoutPrediction(HeckecellsError):
    """A conjecture check needs an a-function source that was not supplied."""


class FingerprintMismatch(HeckecellsError):
    """A KL cache file was built under a different system or weights."""
