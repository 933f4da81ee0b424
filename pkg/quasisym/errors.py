'''
Exceptions raised by quasisym.

All of them derive from ValueError so callers that only care about bad input
can catch that.
'''


class QuasisymError(ValueError):
    pass


class DegreeMismatchError(QuasisymError):
    pass


class BasisMismatchError(QuasisymError):
    pass


class EnumerationBoundError(QuasisymError):
    pass


class NotInvertibleError(QuasisymError):
    pass


class PartSetError(QuasisymError):
    pass


class ConfigError(QuasisymError):
    pass


class AlphabetMismatchError(QuasisymError):
    pass


class BadIndexError(QuasisymError):
    pass
