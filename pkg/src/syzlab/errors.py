"""Exception hierarchy for syzlab."""


class SyzlabError(Exception):
    """Base class for all syzlab errors."""


class ZeroInverse(SyzlabError):
    """Multiplicative inverse of zero requested."""


class OrderOutOfRange(SyzlabError):
    """Series coefficient requested beyond the truncation order."""


class BadIndex(SyzlabError):
    """Malformed exterior-algebra index tuple."""


class IndexOutOfRange(SyzlabError):
    """Exterior degree outside the computable range."""


class NotASubspace(SyzlabError):
    """Claimed subspace is not contained in the ambient space."""


class SingularMatrix(SyzlabError):
    """Square matrix with identically zero determinant."""


class DegenerateInstance(SyzlabError):
    """Random model draw failed its integrity checks after all retries."""


class InsufficientPoints(SyzlabError):
    """Curve has too few rational points for the requested sample."""


class UnsupportedGenus(SyzlabError):
    """Fixture requested for a genus outside its supported range."""


class NonIntegerResult(SyzlabError):
    """A closed form that must be an integer failed its exact division."""


class TruncationTooSmall(SyzlabError):
    """Series truncation order too small for the requested coefficient."""
