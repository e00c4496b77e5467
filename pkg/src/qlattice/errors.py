"""Exception hierarchy shared by every module of the package."""


class QLatticeError(Exception):
    """Base class for all package errors."""


class DivisionByZero(QLatticeError):
    pass


class DegenerateInterpolation(QLatticeError):
    pass


class ZeroSigma(QLatticeError):
    """sigma (or Phi on a backward step) vanishes on a Pearson product path."""


class ZeroWeight(QLatticeError):
    pass


class GammaPole(QLatticeError):
    pass


class Nonconvergent(QLatticeError):
    pass


class CaseNotApplicable(QLatticeError):
    pass


class PoleOnGrid(QLatticeError):
    pass


class NoRelationFound(QLatticeError):
    pass


class IllConditioned(QLatticeError):
    pass


class UndefinedCoefficient(QLatticeError):
    pass


class BadParameters(QLatticeError):
    pass
