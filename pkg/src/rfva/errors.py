"""Exception hierarchy shared by all rfva modules."""


class RfvaError(Exception):
    """Base class for all errors raised by this package."""


class SingularMatrix(RfvaError):
    pass


class NotAPower(RfvaError):
    pass


class DimensionMismatch(RfvaError):
    pass


class NotFinite(RfvaError):
    pass


class NotInvertible(RfvaError):
    pass


class UnknownName(RfvaError):
    pass


class BadPrime(RfvaError):
    pass


class PrimeSearchFailed(RfvaError):
    pass


class SearchBoundExceeded(RfvaError):
    pass


class InconsistentSplit(RfvaError):
    """Constituent dimensions disagree across primes; indicates a bug."""


class InconclusiveSplit(RfvaError):
    """The randomized rational splitting could not certify irreducibility."""


class LengthMismatch(RfvaError):
    pass


class NotOrthonormal(RfvaError):
    pass


class UnresolvedClassWord(RfvaError):
    pass


class NotInvariant(RfvaError):
    pass


class NotCommuting(RfvaError):
    pass


class NotIrreducible(RfvaError):
    pass


class CertificateFailed(RfvaError):
    """A commutant certificate check failed; carries the partial certificate."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ZeroVector(RfvaError):
    pass


class BudgetExceeded(RfvaError):
    """Enumeration budget ran out; carries the best upper bound found so far."""

    def __init__(self, message, upper_bound=None):
        super().__init__(message)
        self.upper_bound = upper_bound


class InsufficientData(RfvaError):
    pass


class IoFailure(RfvaError):
    pass
