"""Exception hierarchy shared by every layer of the package."""


class MinimalDiskError(Exception):
    """Base class for all errors raised by :mod:`minimal_disks`."""


class NonConvergence(MinimalDiskError):
    """Adaptive quadrature could not reach the requested tolerance."""


class NonFiniteField(MinimalDiskError):
    """An integrand returned NaN or Inf at a quadrature node."""


class DomainViolation(MinimalDiskError, ValueError):
    """A point (or quadrature node) lies outside the parameter domain."""


class UnsupportedData(MinimalDiskError, TypeError):
    """The Weierstrass data does not support the requested operation."""


class ZeroDensity(MinimalDiskError, ZeroDivisionError):
    """The height differential vanishes where curvature was requested."""


class EndpointMismatch(MinimalDiskError, ValueError):
    """Two integration paths do not share their endpoints."""


class PoleHit(MinimalDiskError, ZeroDivisionError):
    """Evaluation at a pole of the exponent derivative."""


class RootNotBracketed(MinimalDiskError):
    """The anchoring equation has no sign change on the search interval."""


class DecompositionFailure(MinimalDiskError):
    """A sheet of a sampled surface failed the multi-valued graph test.

    ``pair`` holds the offending pair of sample indices when one exists.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class SinkFailure(MinimalDiskError, OSError):
    """Writing an exported artifact failed."""
