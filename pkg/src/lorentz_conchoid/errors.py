"""Exception hierarchy shared by every module of the package."""


class ConchoidError(Exception):
    """Base class for all errors raised by lorentz_conchoid."""


class NonFiniteError(ConchoidError, ArithmeticError):
    """An operation produced NaN or infinity."""


class DivisorNotInvertible(ConchoidError, ZeroDivisionError):
    """Division by a dual number whose real part is zero."""


class DomainError(ConchoidError, ValueError):
    """A lifted function was evaluated outside its real domain."""


class OutOfDomain(DomainError):
    """An inverse hyperbolic argument left the open interval (-1, 1)."""


class NotTimelike(ConchoidError, ValueError):
    """A direction vector is not timelike."""


class NotOnH2(ConchoidError, ValueError):
    """A dual vector is not on the dual hyperbolic unit sphere."""


class DegenerateConfiguration(ConchoidError, ValueError):
    """The motion parameters hit a singular set (e.g. A = 0)."""


class SingularAtPsiZero(DegenerateConfiguration):
    """A special-case formula divides by sinh(psi) and psi is zero."""


class IncompleteSlice(ConchoidError):
    """Skipped cells break the grid topology needed for meshing."""
