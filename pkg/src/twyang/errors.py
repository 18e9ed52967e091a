"""Exception hierarchy shared by every module."""


class TwyangError(Exception):
    """Base class; ``exit_code`` is what the CLI returns for it."""

    exit_code = 1


class BadArguments(TwyangError):
    exit_code = 2


class UnsupportedRank(BadArguments):
    pass


class BadParams(BadArguments):
    pass


class NotDominant(BadArguments):
    pass


class Unknown(TwyangError):
    """Data the tables deliberately do not carry."""

    exit_code = 5


class NotInCatalogue(Unknown):
    pass


class LabelAbsent(Unknown):
    pass


class ResourceLimit(TwyangError):
    exit_code = 6


class ValidationFailure(TwyangError):
    exit_code = 7


class NonDominantProjection(ValidationFailure):
    pass


class MultiplicityFailure(TwyangError):
    exit_code = 3

    def __init__(self, message, irrep=None):
        super().__init__(message)
        self.irrep = irrep


class InconsistentLabels(TwyangError):
    exit_code = 4


class PathInconsistent(InconsistentLabels):
    pass


class Disconnected(TwyangError):
    exit_code = 8


class Pole(TwyangError):
    exit_code = 9


class FactorsNotIsomorphic(TwyangError):
    exit_code = 10
