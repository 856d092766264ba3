"""Exception and warning types raised by the library."""


class InvalidInputError(ValueError):
    """An input violates a documented invariant (norm, domain, shape)."""


class BranchError(ValueError):
    """A phase path jumps by more than pi between adjacent samples."""


class UndefinedPhaseError(ValueError):
    """Adjacent states are orthogonal, so their relative phase is undefined."""


class RegimeError(ValueError):
    """Inputs fall outside the perturbative regime the formulas assume."""


class AdiabaticityWarning(UserWarning):
    """The expansion accumulated over a run is large enough to matter."""
