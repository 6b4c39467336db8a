class InfeasibleCapacityError(ValueError):
    """No threshold can make the journal's yield equal its capacity."""


class RootNotFoundError(RuntimeError):
    """A bracketed scan found no sign change to refine."""


class NumericalError(RuntimeError):
    """An internal consistency check between two evaluation routes failed."""
