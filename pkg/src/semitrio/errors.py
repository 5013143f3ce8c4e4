"""Exception types raised on malformed input."""


class SemitrioError(ValueError):
    """Base class for rejected inputs."""


class DimensionError(SemitrioError):
    pass


class AlphabetError(SemitrioError):
    """A word or operand uses letters outside the expected alphabet."""


class NotRightLinearError(SemitrioError):
    pass


class MalformedFormError(SemitrioError):
    pass


class DocumentError(SemitrioError):
    """A serialized document does not match its schema."""
