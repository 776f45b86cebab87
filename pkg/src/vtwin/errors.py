class VTwinError(Exception):
    """Base class for all errors raised by this package."""


class InvalidStrandCount(VTwinError, ValueError):
    pass


class InvalidInput(VTwinError, ValueError):
    pass


class NotApplicable(VTwinError, ValueError):
    pass


class NotInKernel(VTwinError, ValueError):
    """The word does not map to the identity permutation."""


class ResourceLimit(VTwinError, RuntimeError):
    pass


class NotAComponentUnion(VTwinError, ValueError):
    pass


class DominationViolation(VTwinError, ValueError):
    pass


class WordParseError(VTwinError, ValueError):
    """Malformed word text; ``position`` is the 0-based column of the bad token."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at column {position}: {text!r}")
