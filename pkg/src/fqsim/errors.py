"""Exception hierarchy shared by every fqsim module."""


class FqSimError(ValueError):
    """Base class for all input/precondition errors raised by fqsim."""


class NotAPrimePower(FqSimError):
    pass


class DivisionByZero(FqSimError, ZeroDivisionError):
    pass


class BothZero(FqSimError):
    pass


class NotMonic(FqSimError):
    pass


class ZeroOrConstant(FqSimError):
    pass


class NotSquare(FqSimError):
    pass


class AmbientMismatch(FqSimError):
    pass


class NotNested(FqSimError):
    pass


class BadDimensions(FqSimError):
    pass


class BadArguments(FqSimError):
    pass


class BadLabel(FqSimError):
    pass


class InvalidChain(FqSimError):
    pass


class SingularS(FqSimError):
    pass


class InconsistentMap(FqSimError):
    """Domain vectors are dependent but their prescribed images are not."""


class TooLarge(FqSimError):
    """Enumeration would exceed the configured budget."""
