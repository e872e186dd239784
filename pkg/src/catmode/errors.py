"""Exception hierarchy.

Input errors (bad geometry, bad basis, out-of-range positions) derive from
``ValueError``; numerical failures derive from ``ArithmeticError``. The CLI
maps the former to exit code 2 and the latter to exit code 3.
"""


class CatmodeError(Exception):
    pass


class InputError(CatmodeError, ValueError):
    pass


class NumericalError(CatmodeError, ArithmeticError):
    pass


class TautOrImpossible(InputError):
    """The chord between the supports is not shorter than the chain."""


class OutOfDomain(InputError):
    pass


class EndpointViolation(InputError):
    pass


class ZeroVector(InputError):
    pass


class ConstraintViolated(InputError):
    """A one-mode trial function does not satisfy end fixity at first order."""


class AmplitudeTooLarge(InputError):
    pass


class DegenerateSystem(InputError):
    """The linear constraint gradient vanishes, so the multiplier is indeterminate."""


class NoConvergence(NumericalError):
    pass


class NonFinite(NumericalError):
    pass


class QuadratureFailure(NonFinite):
    pass


class SingularMass(NumericalError):
    pass


class IndefiniteMass(NumericalError):
    pass


class IndefiniteHessian(NumericalError):
    pass
