"""Exception hierarchy shared by every module."""


class InputError(ValueError):
    """Malformed or inconsistent input (lengths, ranges, file contents)."""


class ParseError(InputError):
    pass


class DomainError(ValueError):
    """An operation was applied outside the objects it is defined on."""


class CycleTypeError(DomainError):
    pass


class HypothesisNotMetError(DomainError):
    """A theorem's hypothesis fails for the supplied code/permutations."""


class CapacityError(RuntimeError):
    """Exhaustive enumeration would exceed the configured dimension cap."""
