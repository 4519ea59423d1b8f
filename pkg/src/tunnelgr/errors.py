"""Exception hierarchy shared by all tunnelgr modules."""


class TunnelGrError(Exception):
    """Base class for every domain error raised by tunnelgr."""


class SpectrumError(TunnelGrError, ValueError):
    """A candidate spectrum violates one of its invariants."""


class NonIncreasingBridgeIndices(SpectrumError):
    pass


class LengthMismatch(SpectrumError):
    pass


class NegativeGenus(SpectrumError):
    pass


class ExteriorBelowAmbient(SpectrumError):
    pass


class InadmissibleKnot(TunnelGrError, ValueError):
    pass


class NotMSmall(TunnelGrError, ValueError):
    pass


class EmptyFactorList(TunnelGrError, ValueError):
    pass


class NonPositiveHoleCount(TunnelGrError, ValueError):
    pass


class NTooSmall(TunnelGrError, ValueError):
    pass


class EnumerationTooLarge(TunnelGrError, RuntimeError):
    pass


class UnknownKnot(TunnelGrError, KeyError):
    def __str__(self) -> str:
        return Exception.__str__(self)


class CatalogParseError(TunnelGrError, ValueError):
    """Malformed catalog document (bad JSON, missing or unknown keys, wrong types)."""


class PropertyFailure(TunnelGrError, AssertionError):
    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
